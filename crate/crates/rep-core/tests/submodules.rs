use std::collections::BTreeMap;

use algebra_core::{build_quotient_basis, catalog, int, preimage, span_intersection, LinComb, Matrix, Quiver, RelationSet, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rep_core::{
    is_subrepresentation, maximal_submodule_in, random_invertible, random_matrix, sample_representation, socle,
    GradedSubspace, Representation,
};

fn algebras() -> Vec<(Quiver, RelationSet, Vec<usize>)> {
    vec![
        (catalog::nakayama_chain().0, catalog::nakayama_chain().1, vec![2, 2, 2]),
        (catalog::truncated_loop(3).0, catalog::truncated_loop(3).1, vec![4]),
        (catalog::commutative_square().0, catalog::commutative_square().1, vec![1, 2, 2, 2]),
        (catalog::cyclic_quiver(2), RelationSet::new(vec![], 5).unwrap(), vec![2, 2]),
    ]
}

/// Largest submodule inside k, computed as {m ∈ k_i : X_p m ∈ k_target for every path p from i}.
fn path_oracle(x: &Representation, k: &GradedSubspace) -> Vec<Matrix> {
    let q = x.quiver();
    let horizon = x.total_dim() + 1;
    q.vertices()
        .map(|v| {
            let mut u = k.at(v).clone();
            for p in q.paths_below(horizon).into_iter().filter(|p| p.source == v) {
                u = span_intersection(&u, &preimage(&x.path_matrix(&p), k.at(p.target)));
            }
            u.column_echelon()
        })
        .collect()
}

fn random_subspace(rng: &mut ChaCha8Rng, dims: &[usize]) -> GradedSubspace {
    let spanning = dims
        .iter()
        .map(|&d| {
            let cols = rng.gen_range(0..=d);
            random_matrix(rng, d, cols)
        })
        .collect();
    GradedSubspace::new(dims.to_vec(), spanning).unwrap()
}

/// The submodule generated by the given vectors at their vertices.
fn generated(x: &Representation, seeds: &[(VertexId, Matrix)]) -> GradedSubspace {
    let q = x.quiver();
    let mut spans: Vec<Matrix> = x.dims().iter().map(|&d| Matrix::zeros(d, 0)).collect();
    for p in q.paths_below(x.total_dim() + 1) {
        for (_, m) in seeds.iter().filter(|(v, _)| *v == p.source) {
            let image = &x.path_matrix(&p) * m;
            let t = p.target - 1;
            spans[t] = Matrix::hstack(&[&spans[t], &image], x.dim(p.target));
        }
    }
    GradedSubspace::new(x.dims().clone(), spans).unwrap()
}

#[test]
fn fixed_point_matches_path_oracle() {
    for (q, rho, alpha) in algebras() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..25 {
            let x = sample_representation(&q, &rho, &alpha, seed).unwrap();
            let k = random_subspace(&mut rng, &alpha);
            let m = maximal_submodule_in(&x, &k);
            assert_eq!(m.bases(), path_oracle(&x, &k).as_slice());
            assert!(is_subrepresentation(&m, &x));
            assert!(k.contains(&m));
        }
    }
}

#[test]
fn fixed_point_is_monotone_and_maximal() {
    for (q, rho, alpha) in algebras() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = sample_representation(&q, &rho, &alpha, 17).unwrap();
        for _ in 0..50 {
            let small = random_subspace(&mut rng, &alpha);
            let large = small.sum(&random_subspace(&mut rng, &alpha));
            assert!(maximal_submodule_in(&x, &large).contains(&maximal_submodule_in(&x, &small)));

            let v = rng.gen_range(1..=q.vertex_count());
            let sub = generated(&x, &[(v, random_matrix(&mut rng, x.dim(v), 1))]);
            assert!(is_subrepresentation(&sub, &x));
            let k = sub.sum(&random_subspace(&mut rng, &alpha));
            assert!(maximal_submodule_in(&x, &k).contains(&sub));
        }
    }
}

#[test]
fn socle_is_annihilated_submodule() {
    for (q, rho, alpha) in algebras() {
        for seed in 0..20 {
            let x = sample_representation(&q, &rho, &alpha, seed).unwrap();
            let s = socle(&x);
            assert!(is_subrepresentation(&s, &x));
            for (k, a) in q.arrows().iter().enumerate() {
                assert!((x.matrix(k) * s.at(a.tail)).is_zero());
            }
        }
    }
}

#[test]
fn echelon_form_is_basis_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let u = random_matrix(&mut rng, 4, 2);
        let g = random_invertible(&mut rng, 2);
        let a = GradedSubspace::new(vec![4], vec![u.clone()]).unwrap();
        let b = GradedSubspace::new(vec![4], vec![&u * &g]).unwrap();
        assert_eq!(a, b);
    }
}

fn nonzero_blocks(m: BTreeMap<(usize, usize), Matrix>) -> BTreeMap<(usize, usize), Matrix> {
    m.into_iter().filter(|(_, b)| !b.is_zero()).collect()
}

#[test]
fn path_action_respects_normal_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut cases = 0;
    for (q, rho, alpha) in algebras().into_iter().take(3) {
        let basis = build_quotient_basis(&q, &rho).unwrap();
        let paths = q.paths_below(basis.table_length_limit());
        for seed in 0..34 {
            let x = sample_representation(&q, &rho, &alpha, seed).unwrap();
            let c = LinComb::from_terms(paths.iter().map(|p| (p.clone(), int(rng.gen_range(-3..=3)))));
            assert_eq!(nonzero_blocks(x.path_action(&basis.normal_form(&c))), nonzero_blocks(x.path_action(&c)));
            cases += 1;
        }
    }
    assert!(cases >= 100);
}
