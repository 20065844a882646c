use algebra_core::{catalog, int, Matrix, Quiver};
use cyclic_fibers::{cycle_quiver, sample_cyclic_representation, CyclicQuiverSpec, RootData};
use framed::{framing_existence, is_stable, FramedRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rep_core::{sample_free, Representation};
use successive_cycles::{
    ambient_socle_multiplicities, build_spade, cycle_simple, cyclic_socle_multiplicities, detect_successive,
    framing_existence_cyclic, MultiRootData, SocleReport, SuccessiveError,
};

fn jordan(m: Matrix) -> Representation {
    Representation::new(catalog::jordan_quiver(), vec![m.rows()], vec![m]).unwrap()
}

#[test]
fn jordan_quiver_with_a_line_framing() {
    let d = detect_successive(&catalog::jordan_quiver()).unwrap();
    let (ok, witness) = framing_existence_cyclic(&jordan(Matrix::diagonal(&[int(1), int(2)])), &d, &[1]).unwrap();
    assert!(ok);
    assert!(is_stable(&witness.unwrap()));
    assert_eq!(framing_existence_cyclic(&jordan(Matrix::identity(2)), &d, &[1]).unwrap(), (false, None));
}

#[test]
fn cycle_simple_has_multiplicity_one() {
    let d = detect_successive(&catalog::cyclic_quiver(3)).unwrap();
    let report = cyclic_socle_multiplicities(&cycle_simple(&d, 0, &int(2)), &d).unwrap();
    assert_eq!(report.vertex_simples, vec![0, 0, 0]);
    assert_eq!(report.cycle_simples, vec![(0, int(2), 1)]);
}

#[test]
fn ambient_socle_counts_framing_coordinates() {
    for (n, zeta) in [(1, vec![2]), (2, vec![1, 2]), (3, vec![2, 1, 1])] {
        let d = detect_successive(&cycle_quiver(n)).unwrap();
        let roots = RootData::new(vec![(int(0), vec![2; n]), (int(3), vec![1; n]), (int(-1), vec![2; n])]);
        let bundle = build_spade(&d, &MultiRootData::new(vec![roots]), &zeta).unwrap();
        let w = bundle.flatten();
        let report = cyclic_socle_multiplicities(&w, &d).unwrap();
        let total: usize = zeta.iter().sum();
        assert_eq!(report.vertex_simples, zeta);
        assert_eq!(report.cycle_simples, vec![(0, int(-1), total), (0, int(3), total)]);
        assert_eq!(ambient_socle_multiplicities(&d, &zeta, &report), report);
    }
}

#[test]
fn criterion_matches_generic_framings_on_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let (mut positive, mut negative) = (0, 0);
    for _ in 0..120 {
        let n = rng.gen_range(1..=2);
        let d = detect_successive(&cycle_quiver(n)).unwrap();
        let mut roots = vec![(int(rng.gen_range(1..=2)), vec![rng.gen_range(1..=2); n])];
        if rng.gen_bool(0.5) {
            roots.push((int(0), (0..n).map(|_| rng.gen_range(1..=2)).collect()));
        }
        let rd = RootData::new(roots);
        let alpha: Vec<usize> = (0..n).map(|i| rd.roots.iter().map(|(_, r)| r[i]).sum()).collect();
        let spec = CyclicQuiverSpec::new(n, alpha, vec![1; n]).unwrap();
        let mut m = sample_cyclic_representation(&spec, &rd, &mut rng).unwrap();
        if rng.gen_bool(0.3) {
            // Scalar blocks have large isotypic socles.
            m = m.direct_sum(&cycle_simple(&d, 0, &rd.roots[0].0));
        }
        let zeta: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        let (ok, witness) = framing_existence_cyclic(&m, &d, &zeta).unwrap();
        if ok {
            assert!(is_stable(&witness.unwrap()));
            positive += 1;
        } else {
            for _ in 0..50 {
                assert!(!is_stable(&FramedRep::random(m.clone(), zeta.clone(), &mut rng).unwrap()));
            }
            negative += 1;
        }
    }
    assert!(positive >= 10 && negative >= 10, "{positive} / {negative}");
}

#[test]
fn acyclic_quivers_reduce_to_the_vertex_socle() {
    let mut rng = ChaCha8Rng::seed_from_u64(72);
    let quivers = [
        catalog::nakayama_chain().0,
        catalog::commutative_square().0,
        Quiver::from_triples(3, &[("a", 1, 2), ("b", 1, 2), ("c", 2, 3)]).unwrap(),
    ];
    for _ in 0..40 {
        for q in &quivers {
            let d = detect_successive(q).unwrap();
            let alpha: Vec<usize> = q.vertices().map(|_| rng.gen_range(0..=2)).collect();
            let zeta: Vec<usize> = q.vertices().map(|_| rng.gen_range(0..=2)).collect();
            let m = sample_free(q, &alpha, &mut rng).unwrap();
            let (ok, witness) = framing_existence_cyclic(&m, &d, &zeta).unwrap();
            assert_eq!(ok, framing_existence(&m, &zeta).0);
            assert!(witness.is_none_or(|w| is_stable(&w)));
            let report = cyclic_socle_multiplicities(&m, &d).unwrap();
            assert_eq!(report, SocleReport { vertex_simples: rep_core::socle(&m).dims(), cycle_simples: vec![] });
        }
    }
}

#[test]
fn irrational_cycle_spectrum_is_reported() {
    let d = detect_successive(&catalog::jordan_quiver()).unwrap();
    let m = jordan(Matrix::from_ints(2, 2, &[0, 2, 1, 0]));
    assert_eq!(cyclic_socle_multiplicities(&m, &d), Err(SuccessiveError::IrrationalSpectrum(1)));
    // Irrational eigenvalues away from the socle are harmless.
    let q = Quiver::from_triples(2, &[("a", 1, 1), ("b", 1, 2)]).unwrap();
    let d = detect_successive(&q).unwrap();
    let m = Representation::new(q, vec![2, 2], vec![Matrix::from_ints(2, 2, &[0, 2, 1, 0]), Matrix::identity(2)]).unwrap();
    assert!(cyclic_socle_multiplicities(&m, &d).unwrap().cycle_simples.is_empty());
}
