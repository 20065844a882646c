use std::collections::BTreeSet;

use algebra_core::{int, Arrow, Matrix, Quiver, Scalar};
use cyclic_fibers::{build_j_lambda, CyclicQuiverSpec, RootData, StringLabel};
use framed::is_stable;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rep_core::{is_subrepresentation, GradedSubspace};
use successive_cycles::{
    build_spade, cycle_char_polys, detect_successive, fiber_spec, sample_stable_successive, MultiRootData,
    SpadeBundle, SpadeVertex, SuccessiveDecomposition, SuccessiveError,
};

type Roots = Vec<(Scalar, Vec<usize>)>;
type Pasted = (Quiver, Vec<(BTreeSet<usize>, usize)>, Vec<(String, usize, usize)>);

fn two_loop_chain() -> Quiver {
    Quiver::from_triples(
        5,
        &[("a1'", 1, 2), ("a1''", 1, 2), ("b", 2, 2), ("a2", 2, 3), ("a3", 3, 4), ("c", 4, 4), ("a4", 4, 5)],
    )
    .unwrap()
}

fn chain_roots(b: Roots, c: Roots, outer: [usize; 3]) -> MultiRootData {
    MultiRootData::new(vec![
        MultiRootData::degenerate(outer[0]),
        RootData::new(b),
        MultiRootData::degenerate(outer[1]),
        RootData::new(c),
        MultiRootData::degenerate(outer[2]),
    ])
}

#[test]
fn two_loop_chain_has_the_listed_spade_quiver() {
    let d = detect_successive(&two_loop_chain()).unwrap();
    let mrd = chain_roots(
        vec![(int(1), vec![1]), (int(2), vec![1])],
        vec![(int(-1), vec![1]), (int(3), vec![1])],
        [1, 1, 1],
    );
    let bundle = build_spade(&d, &mrd, &[1; 5]).unwrap();
    assert_eq!(bundle.names, vec!["1", "2_1", "2_2", "3", "4_1", "4_2", "5"]);
    let name = |v: usize| bundle.names[v - 1].as_str();
    let arrows: Vec<(&str, &str, &str)> =
        bundle.spade_quiver.arrows().iter().map(|a| (a.id.as_str(), name(a.tail), name(a.head))).collect();
    assert_eq!(
        arrows,
        vec![
            ("a1'_1", "1", "2_1"),
            ("a1'_2", "1", "2_2"),
            ("a1''_1", "1", "2_1"),
            ("a1''_2", "1", "2_2"),
            ("b_1", "2_1", "2_1"),
            ("b_2", "2_2", "2_2"),
            ("a2_1", "2_1", "3"),
            ("a2_2", "2_2", "3"),
            ("a3_1", "3", "4_1"),
            ("a3_2", "3", "4_2"),
            ("c_1", "4_1", "4_1"),
            ("c_2", "4_2", "4_2"),
            ("a4_1", "4_1", "5"),
            ("a4_2", "4_2", "5"),
        ]
    );
    assert_eq!(bundle.alpha_tilde, vec![1, 1, 1, 1, 1, 1, 1]);
    // W♠ at 2_j is the λ_j-part of W_2.
    let w = bundle.flatten();
    let tau = w.matrix(2);
    for (j, lambda) in [(2usize, int(1)), (3, int(2))] {
        let generalized = (tau - &Matrix::identity(w.dim(2)).scale(&lambda)).pow(w.dim(2)).kernel();
        assert_eq!(bundle.w_spade.dim(j), generalized.cols());
    }
    let (q, alpha, module) = fiber_spec(&d, &mrd, &[1; 5]).unwrap();
    assert_eq!((q, alpha, module), (bundle.spade_quiver.clone(), bundle.alpha_tilde.clone(), bundle.w_spade.clone()));
}

/// Spectrum of one loop: one or two roots with multiplicity 1 or 2.
fn loop_roots(rng: &mut ChaCha8Rng) -> Roots {
    let mut values = vec![int(0), int(1), int(-2), int(3)];
    values.shuffle(rng);
    let count = rng.gen_range(1..=2);
    values.into_iter().take(count).map(|l| (l, vec![rng.gen_range(1..=2)])).collect()
}

fn check_round_trip(bundle: &SpadeBundle, fr: &framed::FramedRep) {
    let d = &bundle.decomposition;
    let w = bundle.flatten();
    let map = bundle.embed(fr).unwrap();
    assert!(map.is_intertwiner(fr.rep(), &w));
    assert!(map.is_injective());
    let point = bundle.spade_point(&map.blocks);
    assert_eq!(point.dims(), bundle.alpha_tilde);
    assert!(is_subrepresentation(&point, &bundle.w_spade));

    let (back, bases) = bundle.recover(&point).unwrap();
    assert!(is_stable(&back));
    assert_eq!(cycle_char_polys(back.rep(), d), bundle.roots.char_polys(d));
    // The recovered pair embeds as the inclusion of its own point.
    assert_eq!(bundle.embed(&back).unwrap().blocks, bases);
    for (b, m) in bases.iter().zip(&map.blocks) {
        assert_eq!(b.column_echelon(), m.column_echelon());
    }
}

#[test]
fn two_loop_chain_round_trips() {
    let d = detect_successive(&two_loop_chain()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let mut cases = 0;
    for _ in 0..200 {
        if cases == 20 {
            break;
        }
        let mrd = chain_roots(loop_roots(&mut rng), loop_roots(&mut rng), [1, rng.gen_range(0..=1), 1]);
        let bundle = build_spade(&d, &mrd, &[1; 5]).unwrap();
        let Ok(fr) = sample_stable_successive(&d, &mrd, &[1; 5], &mut rng, 20) else { continue };
        check_round_trip(&bundle, &fr);
        cases += 1;
    }
    assert_eq!(cases, 20);
}

#[test]
fn cyclic_quiver_splits_into_copies_of_j_lambda() {
    let cases: Vec<(usize, Roots, Vec<usize>)> = vec![
        (3, vec![(int(0), vec![1, 2, 1]), (int(2), vec![1, 1, 1])], vec![1, 2, 1]),
        (2, vec![(int(-1), vec![2, 2]), (int(5), vec![1, 1])], vec![1, 1]),
        (1, vec![(int(4), vec![3])], vec![2]),
        (1, vec![(int(0), vec![2])], vec![2]),
    ];
    for (n, roots, zeta) in cases {
        let d = detect_successive(&cyclic_fibers::cycle_quiver(n)).unwrap();
        let mrd = MultiRootData::new(vec![RootData::new(roots.clone())]);
        let bundle = build_spade(&d, &mrd, &zeta).unwrap();
        assert_eq!(bundle.vertices.len(), n * roots.len());
        for a in bundle.spade_quiver.arrows() {
            assert_eq!(bundle.vertices[a.tail - 1].root, bundle.vertices[a.head - 1].root);
        }
        for (l, (lambda, r)) in roots.iter().enumerate() {
            let spec = CyclicQuiverSpec::new(n, r.clone(), zeta.clone()).unwrap();
            let j = build_j_lambda(&spec, lambda, r).unwrap();
            let spade = |v: usize| bundle.vertices.iter().position(|sv| *sv == SpadeVertex { vertex: v, root: Some(l) }).unwrap();
            // Permutation from spade labels to string labels.
            let perm = |v: usize| -> Vec<usize> {
                bundle.labels[spade(v)]
                    .iter()
                    .map(|label| {
                        assert!(label.path.is_empty());
                        let (root, s) = label.factors[0].unwrap();
                        assert_eq!(root, l);
                        j.position(&StringLabel { q: label.target, copy: label.copy, s })
                    })
                    .collect()
            };
            for i in 1..=n {
                let k = (0..bundle.lifts.len())
                    .find(|&k| bundle.lifts[k] == i - 1 && bundle.spade_quiver.arrow(k).tail == spade(i) + 1)
                    .unwrap();
                let ours = bundle.w_spade.matrix(k);
                let theirs = j.rep.matrix(i - 1);
                let (rows, cols) = (perm(i % n + 1), perm(i));
                assert_eq!(ours.rows(), theirs.rows());
                for (a, &ra) in rows.iter().enumerate() {
                    for (b, &cb) in cols.iter().enumerate() {
                        assert_eq!(ours.get(a, b), theirs.get(ra, cb));
                    }
                }
            }
        }
    }
}

/// Random acyclic base with random cycles pasted in; returns the quiver and, per base vertex, its
/// vertex set and cycle length.
fn pasted_quiver(rng: &mut ChaCha8Rng) -> Pasted {
    let m = rng.gen_range(1..=5);
    let lengths: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=3)).collect();
    let total: usize = lengths.iter().map(|&n| n.max(1)).sum();
    let mut labels: Vec<usize> = (1..=total).collect();
    labels.shuffle(rng);
    let mut next = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &n in &lengths {
        blocks.push(labels[next..next + n.max(1)].to_vec());
        next += n.max(1);
    }
    let mut arrows = Vec::new();
    for (i, (&n, vs)) in lengths.iter().zip(&blocks).enumerate() {
        for t in 0..n {
            arrows.push(Arrow { id: format!("c{i}_{t}"), tail: vs[t], head: vs[(t + 1) % n] });
        }
    }
    let mut base = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for e in 0..rng.gen_range(0..=1) + usize::from(rng.gen_bool(0.2)) {
                let tail = *blocks[i].choose(rng).unwrap();
                let head = *blocks[j].choose(rng).unwrap();
                let id = format!("b{i}{j}_{e}");
                base.push((id.clone(), i, j));
                arrows.push(Arrow { id, tail, head });
            }
        }
    }
    arrows.shuffle(rng);
    let info = blocks.into_iter().zip(lengths).map(|(vs, n)| (vs.into_iter().collect(), n)).collect();
    (Quiver::new(total, arrows).unwrap(), info, base)
}

#[test]
fn detection_recovers_pasted_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    for _ in 0..50 {
        let (q, info, base) = pasted_quiver(&mut rng);
        let d = detect_successive(&q).unwrap();
        assert_eq!(d.components.len(), info.len());
        let mut seen = Vec::new();
        for (vs, n) in &info {
            let c = d.component_of[vs.iter().next().unwrap() - 1];
            assert_eq!(d.components[c].vertices.iter().copied().collect::<BTreeSet<_>>(), *vs);
            assert_eq!(d.components[c].cycle_length(), *n);
            seen.push(c);
        }
        for (id, i, j) in &base {
            let a = &d.base.arrows()[d.base.arrow_index(id).unwrap()];
            assert_eq!((a.tail, a.head), (seen[*i] + 1, seen[*j] + 1));
        }
        assert_eq!(d.base.arrows().len(), base.len());
        assert!(d.base.is_acyclic());
    }
}

fn random_multi_roots(d: &SuccessiveDecomposition, rng: &mut ChaCha8Rng) -> MultiRootData {
    let components = d
        .components
        .iter()
        .map(|comp| {
            if !comp.is_cycle() {
                return MultiRootData::degenerate(rng.gen_range(0..=2));
            }
            let n = comp.cycle_length();
            let mut roots = vec![(int(0), (0..n).map(|_| rng.gen_range(0..=2)).collect::<Vec<_>>())];
            if roots[0].1.iter().all(|&m| m == 0) {
                roots.clear();
            }
            let lambda = int(rng.gen_range(1..=3));
            roots.push((lambda, vec![rng.gen_range(1..=2); n]));
            RootData::new(roots)
        })
        .collect();
    MultiRootData::new(components)
}

#[test]
fn spade_dimensions_match_a_path_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    for _ in 0..30 {
        let (q, _, _) = pasted_quiver(&mut rng);
        let d = detect_successive(&q).unwrap();
        let mrd = random_multi_roots(&d, &mut rng);
        let zeta: Vec<usize> = q.vertices().map(|_| rng.gen_range(0..=2)).collect();
        let bundle = build_spade(&d, &mrd, &zeta).unwrap();
        // Strings per visit of a component, and framing coordinates at its end.
        let strings = |c: usize| -> usize {
            if d.components[c].is_cycle() {
                (0..mrd.components[c].roots.len()).map(|l| mrd.order(c, l)).sum()
            } else {
                1
            }
        };
        let framing = |c: usize| -> usize { d.components[c].vertices.iter().map(|&v| zeta[v - 1]).sum() };
        let paths = d.base.paths_below(d.base.vertex_count() + 1);
        for (k, sv) in bundle.vertices.iter().enumerate() {
            let c = d.component_of[sv.vertex - 1];
            let first = sv.root.map_or(1, |l| mrd.order(c, l));
            let expected: usize = paths
                .iter()
                .filter(|p| p.source == c + 1)
                .map(|p| {
                    let later: usize = p.arrows.iter().map(|&a| strings(d.base.arrow(a).head - 1)).product();
                    first * later * framing(p.target - 1)
                })
                .sum();
            assert_eq!(bundle.w_spade.dim(k + 1), expected);
            let alpha = match sv.root {
                Some(l) => mrd.components[c].roots[l].1[d.position(sv.vertex)],
                None => mrd.components[c].roots[0].1[0],
            };
            assert_eq!(bundle.alpha_tilde[k], alpha);
        }
    }
}

#[test]
fn cycle_factors_are_annihilated() {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    for _ in 0..30 {
        let (q, _, _) = pasted_quiver(&mut rng);
        let d = detect_successive(&q).unwrap();
        let mrd = random_multi_roots(&d, &mut rng);
        let zeta: Vec<usize> = q.vertices().map(|_| rng.gen_range(1..=2)).collect();
        let bundle = build_spade(&d, &mrd, &zeta).unwrap();
        for (k, sv) in bundle.vertices.iter().enumerate() {
            let Some(l) = sv.root else { continue };
            let c = d.component_of[sv.vertex - 1];
            let (lambda, _) = &mrd.components[c].roots[l];
            let dim = bundle.w_spade.dim(k + 1);
            let tau = d.cycle_at(sv.vertex).iter().fold(Matrix::identity(dim), |acc, &a| {
                let lift = bundle.lifts.iter().enumerate().position(|(j, &b)| {
                    b == a && bundle.vertices[bundle.spade_quiver.arrow(j).tail - 1].root == Some(l)
                });
                bundle.w_spade.matrix(lift.unwrap()) * &acc
            });
            let shifted = &tau - &Matrix::identity(dim).scale(lambda);
            let order = mrd.order(c, l);
            assert!(shifted.pow(order).is_zero());
            if dim > 0 {
                assert!(!shifted.pow(order - 1).is_zero());
            }
        }
    }
}

#[test]
fn zero_multiplicity_gives_an_empty_spade_vertex() {
    let d = detect_successive(&cyclic_fibers::cycle_quiver(2)).unwrap();
    let mrd = MultiRootData::new(vec![RootData::new(vec![(int(0), vec![1, 0])])]);
    let bundle = build_spade(&d, &mrd, &[1, 1]).unwrap();
    assert_eq!(bundle.alpha_tilde, vec![1, 0]);
}

#[test]
fn exponential_submodule_outside_the_fiber() {
    // Jordan quiver, α = ζ = 2, χ = (x − 1)(x − 2): the span of the two λ = 1 strings is a submodule
    // of W of dimension α, but its projections have dimensions (2, 0) instead of α̃ = (1, 1).
    let d = detect_successive(&algebra_core::catalog::jordan_quiver()).unwrap();
    let rd = RootData::new(vec![(int(1), vec![1]), (int(2), vec![1])]);
    let mrd = MultiRootData::new(vec![rd.clone()]);
    let bundle = build_spade(&d, &mrd, &[2]).unwrap();
    let w = bundle.flatten();
    assert_eq!(w.dims(), &vec![4]);
    let first: Vec<usize> = (0..2).collect();
    let u = GradedSubspace::new(vec![4], vec![Matrix::identity(4).select_cols(&first)]).unwrap();
    assert!(is_subrepresentation(&u, &w));
    let point = w.restrict(u.bases()).unwrap();
    assert_ne!(cyclic_fibers::char_polys(&point), rd.char_polys(1));
    assert!(cyclic_fibers::char_polys(&point)[0].coeffs().iter().all(|c| !c.is_zero()));

    let spade_point = GradedSubspace::new(
        bundle.w_spade.dims().clone(),
        vec![Matrix::identity(2), Matrix::zeros(2, 0)],
    )
    .unwrap();
    assert!(is_subrepresentation(&spade_point, &bundle.w_spade));
    assert!(matches!(bundle.recover(&spade_point), Err(SuccessiveError::DimensionMismatch { .. })));
}

#[test]
fn invalid_root_data_is_rejected() {
    let d = detect_successive(&two_loop_chain()).unwrap();
    let bad = chain_roots(vec![(int(1), vec![1]), (int(1), vec![1])], vec![(int(0), vec![1])], [1, 1, 1]);
    assert!(matches!(build_spade(&d, &bad, &[1; 5]), Err(SuccessiveError::InvalidRoots { component: 1, .. })));
    let short = MultiRootData::new(vec![MultiRootData::degenerate(1)]);
    assert!(matches!(build_spade(&d, &short, &[1; 5]), Err(SuccessiveError::ComponentCount { .. })));
}
