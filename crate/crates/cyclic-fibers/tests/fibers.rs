use algebra_core::{int, ratio, Matrix, Poly, Scalar};
use cyclic_fibers::{
    build_j_lambda, char_polys, embed, is_annihilated, recover, root_data_of, sample_cyclic_representation,
    sample_stable_pair, tau_matrix, validate_root_data, CyclicQuiverSpec, FiberAmbient, RootData,
};
use framed::is_stable;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rep_core::{is_subrepresentation, sample_free, GradedSubspace};

/// Random valid root data: a zero root with arbitrary multiplicities and up to two nonzero roots.
fn random_root_data(rng: &mut ChaCha8Rng, n: usize) -> RootData {
    let mut roots = Vec::new();
    let zero: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    if zero.iter().any(|&m| m > 0) {
        roots.push((int(0), zero));
    }
    let mut used: Vec<Scalar> = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let lambda = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=2));
        if lambda.is_zero() || used.contains(&lambda) {
            continue;
        }
        used.push(lambda.clone());
        roots.push((lambda, vec![rng.gen_range(1..=2); n]));
    }
    if roots.is_empty() {
        roots.push((int(1), vec![1; n]));
    }
    RootData::new(roots)
}

fn alpha_of(rd: &RootData, n: usize) -> Vec<usize> {
    (0..n).map(|i| rd.roots.iter().map(|(_, r)| r[i]).sum()).collect()
}

fn nonzero_roots(chi: &Poly) -> Vec<(Scalar, usize)> {
    chi.rational_roots().0.into_iter().filter(|(l, _)| !l.is_zero()).collect()
}

#[test]
fn nonzero_roots_do_not_depend_on_the_vertex() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut with_roots = 0;
    for case in 0..120 {
        let n = rng.gen_range(1..=4);
        let x = if case % 2 == 0 {
            let rd = random_root_data(&mut rng, n);
            let spec = CyclicQuiverSpec::new(n, alpha_of(&rd, n), vec![1; n]).unwrap();
            sample_cyclic_representation(&spec, &rd, &mut rng).unwrap()
        } else {
            // Free samples with unequal dimensions: only the nonzero part must agree.
            let alpha: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
            sample_free(&cyclic_fibers::cycle_quiver(n), &alpha, &mut rng).unwrap()
        };
        let chis = char_polys(&x);
        let reference = nonzero_roots(&chis[0]);
        with_roots += usize::from(!reference.is_empty());
        for chi in &chis[1..] {
            assert_eq!(nonzero_roots(chi), reference);
        }
    }
    assert!(with_roots >= 50);
}

#[test]
fn strings_are_annihilated_and_arrows_fix_other_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..30 {
        let n = rng.gen_range(1..=3);
        let zeta: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
        let r: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let lambda = int(rng.gen_range(-2..=2));
        let spec = CyclicQuiverSpec::new(n, r.clone(), zeta).unwrap();
        let j = build_j_lambda(&spec, &lambda, &r).unwrap();
        assert_eq!(j.dim(), r.iter().max().unwrap() * spec.string_count());
        assert!(is_annihilated(&j));
        for i in 1..=n {
            let a = j.rep.matrix(i - 1);
            for (k, label) in j.labels.iter().enumerate() {
                if label.q != i {
                    let column = Matrix::column_vector(a.column(k));
                    let mut unit = Matrix::zeros(j.dim(), 1);
                    unit.set(k, 0, int(1));
                    assert_eq!(column, unit);
                }
            }
            let shifted = &tau_matrix(&j.rep, i) - &Matrix::identity(j.dim()).scale(&lambda);
            assert!(shifted.pow(j.order).is_zero());
        }
    }
}

#[test]
fn embedding_round_trips_inside_the_ambient() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut cases = 0;
    while cases < 100 {
        let n = rng.gen_range(1..=3);
        let rd = random_root_data(&mut rng, n);
        let alpha = alpha_of(&rd, n);
        let zeta: Vec<usize> = alpha.iter().map(|&a| a.max(1)).collect();
        let spec = CyclicQuiverSpec::new(n, alpha.clone(), zeta).unwrap();
        validate_root_data(&rd, &alpha).unwrap();
        let Ok(fr) = sample_stable_pair(&spec, &rd, &mut rng, 20) else { continue };
        let ambient = FiberAmbient::new(&spec, &rd).unwrap();
        let map = embed(&fr, &ambient).unwrap();
        assert!(map.is_intertwiner(fr.rep(), &ambient.rep));
        assert!(map.is_injective());
        let u = GradedSubspace::image_of(&map.blocks);
        assert!(is_subrepresentation(&u, &ambient.rep));
        assert_eq!(u.dims(), alpha);
        // Each factor receives exactly its multiplicity vector.
        for (c, (_, r)) in ambient.components.iter().zip(&rd.roots) {
            let offset = ambient.offset(ambient.components.iter().position(|x| x == c).unwrap());
            let dims: Vec<usize> = map.blocks.iter().map(|b| b.block(offset, 0, c.dim(), b.cols()).rank()).collect();
            assert_eq!(&dims, r);
        }
        let back = recover(&map.blocks, &ambient).unwrap();
        assert_eq!(back, fr);
        assert!(is_stable(&back));
        let point = ambient.rep.restrict(u.bases()).unwrap();
        assert_eq!(char_polys(&point), rd.char_polys(n));
        assert_eq!(root_data_of(fr.rep()).unwrap().char_polys(n), rd.char_polys(n));
        cases += 1;
    }
}

#[test]
fn unequal_nonzero_multiplicities_are_rejected() {
    let spec = CyclicQuiverSpec::new(2, vec![2, 2], vec![1, 1]).unwrap();
    let rd = RootData::new(vec![(int(1), vec![2, 1]), (int(0), vec![0, 1])]);
    assert!(cyclic_fibers::fiber_components(&spec, &rd).is_err());
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    assert!(sample_cyclic_representation(&spec, &rd, &mut rng).is_err());
}
