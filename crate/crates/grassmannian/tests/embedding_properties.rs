use algebra_core::{build_quotient_basis, catalog, int, LinComb, Matrix, Quiver, RelationSet, VertexId};
use framed::{is_stable, FramedRep};
use grassmannian::{
    build_dagger, build_injective, dagger_condition, dagger_report, grass_membership, image_of, kernel_phi, label_span, phi,
    recover, InjectiveModule,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rep_core::{maximal_submodule_in, random_invertible, random_matrix, sample_representation, socle, GradedSubspace, Representation};

fn algebras() -> Vec<(Quiver, RelationSet, Vec<usize>)> {
    vec![
        (catalog::nakayama_chain().0, catalog::nakayama_chain().1, vec![1, 2, 1]),
        (catalog::truncated_loop(3).0, catalog::truncated_loop(3).1, vec![3]),
        (catalog::commutative_square().0, catalog::commutative_square().1, vec![1, 1, 1, 1]),
        (catalog::truncated_loop(2).0, catalog::truncated_loop(2).1, vec![2]),
    ]
}

fn random_framed(q: &Quiver, rho: &RelationSet, alpha: &[usize], seed: u64, rng: &mut ChaCha8Rng) -> FramedRep {
    let x = sample_representation(q, rho, &alpha.to_vec(), seed).unwrap();
    let zeta: Vec<usize> = alpha.iter().map(|_| rng.gen_range(0..=2)).collect();
    FramedRep::random(x, zeta, rng).unwrap()
}

#[test]
fn injective_dimensions_of_the_examples() {
    let (q, rho) = catalog::nakayama_chain();
    let b = build_quotient_basis(&q, &rho).unwrap();
    assert_eq!(build_injective(&b, &vec![1, 1, 1]).dims(), &[2, 2, 1]);
    assert_eq!(build_injective(&b, &vec![2, 3, 5]).dims(), &[5, 8, 5]);

    let (q, rho) = catalog::commutative_square();
    let b = build_quotient_basis(&q, &rho).unwrap();
    let z = [1usize, 2, 3, 4];
    let j = build_injective(&b, &z.to_vec());
    assert_eq!(j.dims(), &[z[0] + z[1] + z[2] + z[3], z[1] + z[3], z[2] + z[3], z[3]]);
    let b2b1 = LinComb::from_path(q.path_from_ids(&["b2", "b1"]).unwrap());
    assert_eq!(b.normal_form(&b2b1), LinComb::from_path(q.path_from_ids(&["a2", "a1"]).unwrap()));
}

#[test]
fn truncated_polynomial_ring_shift_and_dagger() {
    let (q, rho) = catalog::truncated_loop(3);
    let b = build_quotient_basis(&q, &rho).unwrap();
    let j = build_injective(&b, &vec![2]);
    assert_eq!(j.dims(), &[6]);
    // Blocks V^(e), V^(a), V^(aa): a sends V^(a^t) to V^(a^(t-1)) and kills V^(e).
    let mut shift = Matrix::zeros(6, 6);
    shift.set_block(0, 2, &Matrix::identity(4));
    assert_eq!(j.rep.matrix(0), &shift);
    let d = build_dagger(&j);
    let a = &d.arrows[0];
    assert_eq!(a.tilde_labels, vec![0, 1, 2, 3]);
    let mut relabel = Matrix::zeros(6, 4);
    relabel.set_block(2, 0, &Matrix::identity(4));
    assert_eq!(a.dagger, relabel);
    assert_eq!(j.rep.matrix(0) * &a.dagger, label_span(&j, 1, &a.tilde_labels));
}

#[test]
fn intertwining_kernel_and_stability() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut cases = 0;
    for (q, rho, alpha) in algebras() {
        let b = build_quotient_basis(&q, &rho).unwrap();
        for seed in 0..50 {
            let fr = random_framed(&q, &rho, &alpha, seed, &mut rng);
            let j = build_injective(&b, fr.zeta());
            let map = phi(&fr, &j);
            assert!(map.is_intertwiner(fr.rep(), &j.rep));
            let kernel = kernel_phi(&fr, &j);
            assert_eq!(kernel, maximal_submodule_in(fr.rep(), &fr.framing_kernel()));
            assert_eq!(map.is_injective(), is_stable(&fr));
            cases += 1;
        }
    }
    assert!(cases >= 200);
}

fn stable_pairs(count_per_algebra: usize) -> Vec<(FramedRep, InjectiveModule)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut out = Vec::new();
    for (q, rho, alpha) in algebras() {
        let b = build_quotient_basis(&q, &rho).unwrap();
        let mut found = 0;
        let mut seed = 0;
        while found < count_per_algebra {
            let x = sample_representation(&q, &rho, &alpha, seed).unwrap();
            seed += 1;
            let zeta: Vec<usize> = alpha.iter().map(|&a| rng.gen_range(1..=a.max(1) + 1)).collect();
            let fr = FramedRep::random(x, zeta, &mut rng).unwrap();
            if is_stable(&fr) {
                let j = build_injective(&b, fr.zeta());
                out.push((fr, j));
                found += 1;
            }
        }
    }
    out
}

#[test]
fn recovery_inverts_the_embedding() {
    let pairs = stable_pairs(25);
    assert!(pairs.len() >= 100);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (fr, j) in pairs {
        let map = phi(&fr, &j);
        let back = recover(&map.blocks, &j).unwrap();
        assert_eq!(back, fr);
        // Any other basis of the same image recovers an isomorphic pair with the same image.
        let g: Vec<Matrix> = fr.dims().iter().map(|&d| random_invertible(&mut rng, d)).collect();
        let rebased: Vec<Matrix> = map.blocks.iter().zip(&g).map(|(b, gi)| b * gi).collect();
        let other = recover(&rebased, &j).unwrap();
        assert_eq!(image_of(&phi(&other, &j)), image_of(&map));
    }
}

#[test]
fn image_is_a_base_change_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (fr, j) in stable_pairs(13).into_iter().take(50) {
        let g: Vec<Matrix> = fr.dims().iter().map(|&d| random_invertible(&mut rng, d)).collect();
        let moved = fr.change_basis(&g).unwrap();
        let image = image_of(&phi(&fr, &j));
        assert_eq!(image_of(&phi(&moved, &j)), image);
        assert!(grass_membership(&image, &j));
    }
}

/// Submodule of J generated by random vectors at random vertices.
fn random_submodule(j: &InjectiveModule, rng: &mut ChaCha8Rng) -> GradedSubspace {
    let q = j.rep.quiver();
    let horizon = j.rep.total_dim() + 1;
    let generators: Vec<(VertexId, Matrix)> = (0..rng.gen_range(0..=2))
        .map(|_| {
            let v = rng.gen_range(1..=q.vertex_count());
            // Sparse vectors generate proper submodules more often.
            let m = Matrix::from_fn(j.rep.dim(v), 1, |_, _| if rng.gen_bool(0.4) { int(rng.gen_range(-3..=3)) } else { int(0) });
            (v, m)
        })
        .collect();
    let mut spans: Vec<Matrix> = j.rep.dims().iter().map(|&d| Matrix::zeros(d, 0)).collect();
    for p in q.paths_below(horizon) {
        for (v, m) in &generators {
            if *v == p.source {
                let image = &j.rep.path_matrix(&p) * m;
                let t = p.target - 1;
                spans[t] = Matrix::hstack(&[&spans[t], &image], j.rep.dim(p.target));
            }
        }
    }
    GradedSubspace::new(j.rep.dims().to_vec(), spans).unwrap()
}

#[test]
fn inclusion_system_agrees_with_submodule_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut members, mut others) = (0, 0);
    for (q, rho, _) in algebras() {
        let b = build_quotient_basis(&q, &rho).unwrap();
        for round in 0..130 {
            let zeta: Vec<usize> = q.vertices().map(|_| rng.gen_range(0..=2)).collect();
            let j = build_injective(&b, &zeta);
            let d = build_dagger(&j);
            let mut u = random_submodule(&j, &mut rng);
            if round % 2 == 1 {
                let v = rng.gen_range(1..=q.vertex_count());
                let extra = GradedSubspace::new(
                    j.rep.dims().to_vec(),
                    q.vertices()
                        .map(|w| random_matrix(&mut rng, j.rep.dim(w), usize::from(w == v)))
                        .collect(),
                )
                .unwrap();
                u = u.sum(&extra);
            }
            let truth = grass_membership(&u, &j);
            assert_eq!(dagger_condition(&u, &j, &d), truth);
            if truth {
                members += 1;
            } else {
                others += 1;
            }
        }
    }
    assert!(members + others >= 500);
    assert!(members >= 100 && others >= 100, "members {members}, others {others}");
}

#[test]
fn socle_of_j_is_the_trivial_label_block() {
    for (q, rho, _) in algebras() {
        let b = build_quotient_basis(&q, &rho).unwrap();
        let zeta: Vec<usize> = q.vertices().map(|v| v % 3 + 1).collect();
        let j = build_injective(&b, &zeta);
        let soc = socle(&j.rep);
        for v in q.vertices() {
            let expected = label_span(&j, v, &j.labels.trivial_positions(v)).column_echelon();
            assert_eq!(soc.at(v), &expected);
        }
    }
}

#[test]
fn square_inclusion_system_uses_the_arrow_kernels() {
    let (q, rho) = catalog::commutative_square();
    let b = build_quotient_basis(&q, &rho).unwrap();
    let j = build_injective(&b, &vec![1, 1, 1, 1]);
    let mut lines = dagger_report(&j, &build_dagger(&j));
    lines.sort();
    assert_eq!(
        lines,
        ["U1 ⊆ V1 ⊕ V2^(a1) ⊕ U3", "U1 ⊆ V1 ⊕ V3^(b1) ⊕ U2", "U2 ⊆ V2 ⊕ U4", "U3 ⊆ V3 ⊕ U4", "U4 ⊆ V4"]
    );
}

#[test]
fn zero_module_embeds_trivially() {
    let (q, rho) = catalog::nakayama_chain();
    let b = build_quotient_basis(&q, &rho).unwrap();
    let j = build_injective(&b, &vec![1, 1, 1]);
    let blocks: Vec<Matrix> = j.dims().iter().map(|&d| Matrix::zeros(d, 0)).collect();
    let fr = recover(&blocks, &j).unwrap();
    assert_eq!(fr.dims(), &vec![0, 0, 0]);
    let zero = Representation::zero(q, vec![0, 0, 0]).unwrap();
    assert_eq!(fr.rep(), &zero);
    assert!(grass_membership(&GradedSubspace::zero(j.dims().to_vec()), &j));
}
