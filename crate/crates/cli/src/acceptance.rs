//! The acceptance suite shared by `selftest` and the `acceptance` test target. Each criterion returns a
//! short summary on success and the first disagreement on failure; criteria run on separate threads.

use std::collections::BTreeMap;

use algebra_core::{
    build_quotient_basis, catalog, int, span_intersection, LinComb, Matrix, Poly, Quiver, RelationSet, Scalar,
    VertexId,
};
use cyclic_fibers::{
    build_j_lambda, char_polys, coordinates_for, Coordinate, cyclic_pluecker_equations, embed, evaluate_equations,
    jordan_pluecker_equations, reduce_by_linear, sample_cyclic_representation, sample_stable_pair, CyclicQuiverSpec,
    EquationSet, FiberAmbient, Polynomial, RootData, StringLabel,
};
use framed::{framing_existence, is_stable, null_cone_membership, product_of_cycles_vanishes, FramedRep};
use grassmannian::{
    build_dagger, build_injective, dagger_condition, grass_membership, image_of, kernel_phi, label_span, phi, recover,
    InjectiveModule,
};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rep_core::{
    is_subrepresentation, maximal_submodule_in, random_invertible, random_matrix, sample_free, sample_representation, socle,
    GradedSubspace, Representation,
};
use successive_cycles::{
    ambient_socle_multiplicities, build_spade, cycle_char_polys, cyclic_socle_multiplicities, detect_successive,
    framing_existence_cyclic, sample_stable_successive, MultiRootData, SpadeBundle, SpadeVertex,
};

use crate::commands::{BasisReport, CriterionJson, DaggerReport, FiberReport, FramingReport, InjectiveReport};
use crate::schema::{EquationSetJson, QuiverJson};

type Check = Result<String, String>;
type Roots = Vec<(Scalar, Vec<usize>)>;

struct Criterion {
    id: usize,
    title: &'static str,
    check: fn(u64) -> Check,
}

const CRITERIA: [Criterion; 14] = [
    Criterion { id: 1, title: "injective module and inclusion system of the chain 1 → 2 → 3", check: chain_injective },
    Criterion { id: 2, title: "shift module of the truncated loop and its dagger", check: truncated_loop_shift },
    Criterion { id: 3, title: "injective dimensions and normal form on the commutative square", check: square_injective },
    Criterion { id: 4, title: "embedding intertwines, has the fixed-point kernel, injective iff stable", check: embedding_suite },
    Criterion { id: 5, title: "recovery inverts the embedding", check: recovery_round_trip },
    Criterion { id: 6, title: "stable framing exists iff the socle fits", check: framing_criterion },
    Criterion { id: 7, title: "inclusion system iff submodule", check: inclusion_system },
    Criterion { id: 8, title: "null cone iff cycle products vanish", check: null_cone },
    Criterion { id: 9, title: "loop equations for m = q = 2 and the distinct-eigenvalue fiber", check: loop_equations },
    Criterion { id: 10, title: "loop equations cut out the invariant subspaces", check: loop_oracle },
    Criterion { id: 11, title: "two-cycle equations cut out the submodules", check: two_cycle_oracle },
    Criterion { id: 12, title: "nonzero cycle roots agree across vertices", check: cycle_roots },
    Criterion { id: 13, title: "spade quiver of the two-loop chain and its round trip", check: spade_suite },
    Criterion { id: 14, title: "framings of the loop with cycle-simple socle", check: cycle_simple_framings },
];

/// Runs every criterion, each on its own thread; a panic counts as a failure.
pub fn run_all(seed: u64) -> Vec<CriterionJson> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = CRITERIA.iter().map(|c| (c, scope.spawn(move || (c.check)(seed)))).collect();
        handles
            .into_iter()
            .map(|(c, h)| {
                let outcome = h.join().unwrap_or_else(|panic| {
                    let msg = panic
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_default();
                    Err(format!("panicked: {msg}"))
                });
                let (passed, detail) = match outcome {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                CriterionJson { id: c.id, title: c.title.to_string(), passed, detail }
            })
            .collect()
    })
}

pub fn line(c: &CriterionJson) -> String {
    format!("[{}] {:>2}. {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.title, c.detail)
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn text<E: ToString>(e: E) -> String {
    e.to_string()
}

/// Runs the command line in process; input errors become failures.
fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = crate::run(std::iter::once("quivermod").chain(args.iter().copied()), &mut out, &mut err);
    if code == 2 {
        return Err(format!("{args:?} exited with 2: {}", String::from_utf8_lossy(&err).trim()));
    }
    Ok((code, String::from_utf8(out).map_err(text)?))
}

fn parse<T: serde::de::DeserializeOwned>(json: &str) -> Result<T, String> {
    serde_json::from_str(json).map_err(text)
}

fn quiver_arg(q: &Quiver, rho: Option<&RelationSet>) -> String {
    serde_json::to_string(&QuiverJson::from_quiver(q, rho)).expect("quivers serialize")
}

fn sorted(lines: &[String]) -> Vec<String> {
    let mut v = lines.to_vec();
    v.sort();
    v
}

fn chain_injective(_: u64) -> Check {
    let (q, rho) = catalog::nakayama_chain();
    let qj = quiver_arg(&q, Some(&rho));
    let (code, out) = cli(&["basis", "--quiver", &qj])?;
    let basis: BasisReport = parse(&out)?;
    ensure(code == 0 && basis.dim == 5, || format!("basis has {} paths", basis.dim))?;
    let (_, out) = cli(&["injective", "--quiver", &qj, "--zeta", "[1,1,1]"])?;
    let j: InjectiveReport = parse(&out)?;
    ensure(j.dims == [2, 2, 1], || format!("dim J = {:?}", j.dims))?;
    let (_, out) = cli(&["dagger-report", "--quiver", &qj, "--zeta", "[1,1,1]"])?;
    let report: DaggerReport = parse(&out)?;
    let expected: Vec<String> = ["U3 ⊆ V3", "U2 ⊆ V2 ⊕ U3", "U1 ⊆ V1 ⊕ (U2 ∩ V2)"].map(String::from).to_vec();
    ensure(sorted(&report.inclusions) == sorted(&expected), || format!("inclusions {:?}", report.inclusions))?;
    Ok(format!("5 basis paths, dim J = (2,2,1), inclusions {}", expected.join("; ")))
}

fn truncated_loop_shift(_: u64) -> Check {
    let (q, rho) = catalog::truncated_loop(3);
    let b = build_quotient_basis(&q, &rho).map_err(text)?;
    let j = build_injective(&b, &vec![2]);
    ensure(j.dims() == [6], || format!("dim J = {:?}", j.dims()))?;
    let mut shift = Matrix::zeros(6, 6);
    shift.set_block(0, 2, &Matrix::identity(4));
    ensure(j.rep.matrix(0) == &shift, || "the loop is not the block shift with zero first block".into())?;
    let d = build_dagger(&j);
    let a = &d.arrows[0];
    let labels = j.labels.at(1);
    for (c, &tilde) in a.tilde_labels.iter().enumerate() {
        let column = a.dagger.column(c);
        let hit: Vec<usize> = (0..column.len()).filter(|&r| !column[r].is_zero()).collect();
        ensure(hit.len() == 1 && column[hit[0]] == int(1), || format!("dagger column {c} is not a unit vector"))?;
        let (from, to) = (&labels[tilde], &labels[hit[0]]);
        ensure(to.path.len() == from.path.len() + 1 && to.copy == from.copy, || {
            format!("dagger sends {} to {}", j.label_name(from), j.label_name(to))
        })?;
    }
    ensure(j.rep.matrix(0) * &a.dagger == label_span(&j, 1, &a.tilde_labels), || "a∘† is not the identity".into())?;
    Ok("J = k⁶, a is the shift, † raises the power of a, a∘† = id".into())
}

fn square_injective(_: u64) -> Check {
    let (q, rho) = catalog::commutative_square();
    let b = build_quotient_basis(&q, &rho).map_err(text)?;
    for z in [[1, 1, 1, 1], [1, 2, 3, 4], [0, 2, 1, 3], [2, 0, 0, 1], [3, 1, 0, 0]] {
        let j = build_injective(&b, &z.to_vec());
        let expected = [z[0] + z[1] + z[2] + z[3], z[1] + z[3], z[2] + z[3], z[3]];
        ensure(j.dims() == expected, || format!("ζ = {z:?}: dim J = {:?}", j.dims()))?;
    }
    let b2b1 = LinComb::from_path(q.path_from_ids(&["b2", "b1"]).map_err(text)?);
    let a2a1 = LinComb::from_path(q.path_from_ids(&["a2", "a1"]).map_err(text)?);
    ensure(b.normal_form(&b2b1) == a2a1, || "nf(b2b1) differs from a2a1".into())?;
    let (_, out) = cli(&["dagger-report", "--quiver", &quiver_arg(&q, Some(&rho)), "--zeta", "[1,1,1,1]"])?;
    let report: DaggerReport = parse(&out)?;
    let expected: Vec<String> =
        ["U1 ⊆ V1 ⊕ V2^(a1) ⊕ U3", "U1 ⊆ V1 ⊕ V3^(b1) ⊕ U2", "U2 ⊆ V2 ⊕ U4", "U3 ⊆ V3 ⊕ U4", "U4 ⊆ V4"]
            .map(String::from)
            .to_vec();
    ensure(sorted(&report.inclusions) == expected, || format!("inclusions {:?}", report.inclusions))?;
    Ok("dim J matches on 5 framings, nf(b2b1) = a2a1, inclusion system matches".into())
}

fn embedding_algebras() -> Vec<(Quiver, RelationSet, Vec<usize>)> {
    vec![
        (catalog::nakayama_chain().0, catalog::nakayama_chain().1, vec![1, 2, 1]),
        (catalog::truncated_loop(3).0, catalog::truncated_loop(3).1, vec![3]),
        (catalog::commutative_square().0, catalog::commutative_square().1, vec![1, 1, 1, 1]),
        (catalog::truncated_loop(2).0, catalog::truncated_loop(2).1, vec![2]),
    ]
}

fn embedding_suite(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(401));
    let (mut cases, mut stable) = (0, 0);
    for (q, rho, alpha) in embedding_algebras() {
        let b = build_quotient_basis(&q, &rho).map_err(text)?;
        for s in 0..50 {
            let x = sample_representation(&q, &rho, &alpha, seed.wrapping_mul(1000).wrapping_add(s)).map_err(text)?;
            let zeta: Vec<usize> = alpha.iter().map(|_| rng.gen_range(0..=2)).collect();
            let fr = FramedRep::random(x, zeta, &mut rng).map_err(text)?;
            let j = build_injective(&b, fr.zeta());
            let map = phi(&fr, &j);
            ensure(map.is_intertwiner(fr.rep(), &j.rep), || format!("case {cases}: Φ does not intertwine"))?;
            let fixed = maximal_submodule_in(fr.rep(), &fr.framing_kernel());
            ensure(kernel_phi(&fr, &j) == fixed, || format!("case {cases}: ker Φ differs from the largest submodule in ker f"))?;
            ensure(map.is_injective() == is_stable(&fr), || format!("case {cases}: injectivity and stability disagree"))?;
            stable += usize::from(is_stable(&fr));
            cases += 1;
        }
    }
    ensure(cases >= 200, || format!("only {cases} cases"))?;
    Ok(format!("{cases} framed representations ({stable} stable), zero failures"))
}

fn recovery_round_trip(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(501));
    let mut cases = 0;
    for (q, rho, alpha) in embedding_algebras() {
        let b = build_quotient_basis(&q, &rho).map_err(text)?;
        let (mut found, mut s) = (0, seed.wrapping_mul(1000));
        while found < 25 {
            let x = sample_representation(&q, &rho, &alpha, s).map_err(text)?;
            s = s.wrapping_add(1);
            let zeta: Vec<usize> = alpha.iter().map(|&a| rng.gen_range(1..=a.max(1) + 1)).collect();
            let fr = FramedRep::random(x, zeta, &mut rng).map_err(text)?;
            if !is_stable(&fr) {
                continue;
            }
            let j = build_injective(&b, fr.zeta());
            let map = phi(&fr, &j);
            let back = recover(&map.blocks, &j).map_err(text)?;
            ensure(back == fr, || format!("case {cases}: s∘Φ is not the identity"))?;
            let g: Vec<Matrix> = fr.dims().iter().map(|&d| random_invertible(&mut rng, d)).collect();
            let rebased: Vec<Matrix> = map.blocks.iter().zip(&g).map(|(b, gi)| b * gi).collect();
            let other = recover(&rebased, &j).map_err(text)?;
            ensure(image_of(&phi(&other, &j)) == image_of(&map), || format!("case {cases}: Φ∘s moved the column span"))?;
            found += 1;
            cases += 1;
        }
    }
    ensure(cases >= 100, || format!("only {cases} stable pairs"))?;
    Ok(format!("{cases} stable pairs, s∘Φ = id and Φ∘s keeps the span"))
}

fn existence_algebras() -> Vec<(Quiver, RelationSet, Vec<usize>)> {
    vec![
        (catalog::nakayama_chain().0, catalog::nakayama_chain().1, vec![2, 2, 1]),
        (catalog::truncated_loop(3).0, catalog::truncated_loop(3).1, vec![3]),
        (catalog::commutative_square().0, catalog::commutative_square().1, vec![1, 2, 1, 2]),
        (catalog::truncated_loop(2).0, catalog::truncated_loop(2).1, vec![4]),
    ]
}

fn framing_criterion(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(601));
    let (mut cases, mut positive) = (0, 0);
    for (q, rho, alpha) in existence_algebras() {
        for s in 0..25 {
            let x = sample_representation(&q, &rho, &alpha, seed.wrapping_mul(1000).wrapping_add(s)).map_err(text)?;
            let zeta: Vec<usize> = alpha.iter().map(|_| rng.gen_range(0..=2)).collect();
            let soc = socle(&x);
            let fits = soc.dims().iter().zip(&zeta).all(|(s, z)| s <= z);
            let (exists, witness) = framing_existence(&x, &zeta);
            ensure(exists == fits, || format!("case {cases}: answer {exists}, socle {:?}, ζ {zeta:?}", soc.dims()))?;
            if exists {
                ensure(witness.as_ref().is_some_and(is_stable), || format!("case {cases}: witness is not stable"))?;
                positive += 1;
            } else {
                for _ in 0..50 {
                    let fr = FramedRep::random(x.clone(), zeta.clone(), &mut rng).map_err(text)?;
                    let kernel = fr.framing_kernel();
                    let meets = q.vertices().any(|v| span_intersection(soc.at(v), kernel.at(v)).cols() > 0);
                    ensure(meets && !is_stable(&fr), || format!("case {cases}: a random framing misses the socle"))?;
                }
            }
            cases += 1;
        }
    }
    ensure(cases >= 100, || format!("only {cases} modules"))?;
    Ok(format!("{cases} modules ({positive} admit a framing), zero failures"))
}

/// Submodule of J generated by random sparse vectors.
fn random_submodule(j: &InjectiveModule, rng: &mut ChaCha8Rng) -> GradedSubspace {
    let q = j.rep.quiver();
    let horizon = j.rep.total_dim() + 1;
    let generators: Vec<(VertexId, Matrix)> = (0..rng.gen_range(0..=2))
        .map(|_| {
            let v = rng.gen_range(1..=q.vertex_count());
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
    GradedSubspace::new(j.rep.dims().to_vec(), spans).expect("spans live in J")
}

fn inclusion_system(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(701));
    let (mut members, mut others) = (0, 0);
    for (q, rho, _) in embedding_algebras() {
        let b = build_quotient_basis(&q, &rho).map_err(text)?;
        for round in 0..130 {
            let zeta: Vec<usize> = q.vertices().map(|_| rng.gen_range(0..=2)).collect();
            let j = build_injective(&b, &zeta);
            let d = build_dagger(&j);
            let mut u = random_submodule(&j, &mut rng);
            if round % 2 == 1 {
                let v = rng.gen_range(1..=q.vertex_count());
                let extra = GradedSubspace::new(
                    j.rep.dims().to_vec(),
                    q.vertices().map(|w| random_matrix(&mut rng, j.rep.dim(w), usize::from(w == v))).collect(),
                )
                .map_err(text)?;
                u = u.sum(&extra);
            }
            let truth = grass_membership(&u, &j);
            ensure(dagger_condition(&u, &j, &d) == truth, || format!("round {round}: inclusion system says {}", !truth))?;
            if truth {
                members += 1;
            } else {
                others += 1;
            }
        }
    }
    ensure(members + others >= 500, || format!("only {} subspaces", members + others))?;
    ensure(members >= 100 && others >= 100, || format!("unbalanced sample: {members} submodules, {others} others"))?;
    Ok(format!("{} subspaces ({members} submodules), zero disagreements", members + others))
}

fn nilpotent(rng: &mut ChaCha8Rng, d: usize) -> Matrix {
    let upper = Matrix::from_fn(d, d, |i, j| if j > i { int(rng.gen_range(-5..=5)) } else { int(0) });
    let g = random_invertible(rng, d);
    &(&g * &upper) * &g.inverse().expect("invertible")
}

fn null_cone(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(801));
    let (mut cases, mut members) = (0, 0);
    for case in 0..100 {
        let d = rng.gen_range(1..=3);
        let a = if case % 2 == 0 { nilpotent(&mut rng, d) } else { random_matrix(&mut rng, d, d) };
        let x = Representation::new(catalog::jordan_quiver(), vec![d], vec![a]).map_err(text)?;
        let member = null_cone_membership(&x);
        ensure(member == product_of_cycles_vanishes(&x, d), || format!("loop case {case} disagrees"))?;
        members += usize::from(member);
        cases += 1;
    }
    for case in 0..100 {
        let (d1, d2) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let (a1, a2) = if case % 2 == 0 && d1 == d2 {
            let a1 = random_invertible(&mut rng, d1);
            let a2 = &nilpotent(&mut rng, d1) * &a1.inverse().expect("invertible");
            (a1, a2)
        } else if case % 2 == 0 {
            (random_matrix(&mut rng, d2, d1), Matrix::zeros(d1, d2))
        } else {
            (random_matrix(&mut rng, d2, d1), random_matrix(&mut rng, d1, d2))
        };
        let x = Representation::new(catalog::cyclic_quiver(2), vec![d1, d2], vec![a1, a2]).map_err(text)?;
        let member = null_cone_membership(&x);
        ensure(member == product_of_cycles_vanishes(&x, d1.max(d2)), || format!("two-cycle case {case} disagrees"))?;
        members += usize::from(member);
        cases += 1;
    }
    for d in 1..=4 {
        let strict = Matrix::from_fn(d, d, |i, j| if j > i { int(rng.gen_range(-5..=5)) } else { int(0) });
        let x = Representation::new(catalog::jordan_quiver(), vec![d], vec![strict]).map_err(text)?;
        ensure(null_cone_membership(&x), || format!("strictly triangular {d}×{d} is not a member"))?;
        let diag = Matrix::from_fn(d, d, |i, j| if i == j { int(i as i64 + 1) } else { int(0) });
        let y = Representation::new(catalog::jordan_quiver(), vec![d], vec![diag]).map_err(text)?;
        ensure(!null_cone_membership(&y) && !product_of_cycles_vanishes(&y, d), || format!("diag(1..{d}) is a member"))?;
    }
    Ok(format!("{cases} instances ({members} members), zero disagreements; triangular in, diagonal out"))
}

fn loop_poly(terms: &[(i64, &[&[usize]])]) -> Polynomial {
    terms
        .iter()
        .map(|(c, mono)| {
            let mut m: Vec<Coordinate> = mono.iter().map(|ix| Coordinate { vertex: 1, indices: ix.to_vec() }).collect();
            m.sort();
            (m, int(*c))
        })
        .collect()
}

fn polys(eqs: &EquationSet) -> Vec<Polynomial> {
    eqs.equations.iter().map(|e| e.polynomial()).collect()
}

fn loop_equations(_: u64) -> Check {
    let (code, out) = cli(&["equations", "--m", "2", "--q", "2"])?;
    ensure(code == 0, || format!("exit code {code}"))?;
    let eqs = parse::<EquationSetJson>(&out)?.equation_set().map_err(text)?;
    let expected = vec![
        loop_poly(&[(1, &[&[1, 4], &[1, 4]]), (-1, &[&[1, 3], &[2, 4]])]),
        loop_poly(&[(1, &[&[3, 4]])]),
        loop_poly(&[(1, &[&[1, 4]]), (-1, &[&[2, 3]])]),
    ];
    ensure(reduce_by_linear(&polys(&eqs)) == reduce_by_linear(&expected), || "the reduced system differs".into())?;

    let spec = r#"{"n": 1, "alpha": [2], "zeta": [2]}"#;
    let roots = r#"{"roots": [{"lambda": "1", "r": [1]}, {"lambda": "2", "r": [1]}]}"#;
    let (_, out) = cli(&["fiber", "--spec", spec, "--roots", roots])?;
    let fiber: FiberReport = parse(&out)?;
    ensure(fiber.factors.len() == 2, || format!("{} factors", fiber.factors.len()))?;
    for f in &fiber.factors {
        ensure(f.labels.len() == 2 && f.r == [1], || format!("factor {} is not a line in k²", f.lambda))?;
        ensure(f.equations.equations.is_empty(), || format!("factor {} has equations", f.lambda))?;
    }
    Ok("reduces to p14² − p13p24, p34, p14 − p23; distinct roots give two unconstrained P¹ factors".into())
}

fn full_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, rows, cols);
        if m.rank() == cols {
            return m;
        }
    }
}

fn loop_oracle(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1001));
    let (mut solutions, mut violations) = (0, 0);
    for m in 1..=3usize {
        for q in 1..=3usize {
            let eqs = jordan_pluecker_equations(m, q);
            let lambda = int(if (m + q) % 2 == 0 { 0 } else { 2 });
            let spec = CyclicQuiverSpec::new(1, vec![m], vec![q]).map_err(text)?;
            let rd = RootData::new(vec![(lambda, vec![m])]);
            let ambient = FiberAmbient::new(&spec, &rd).map_err(text)?;
            for _ in 0..100 {
                let fr = sample_stable_pair(&spec, &rd, &mut rng, 50).map_err(text)?;
                let u = GradedSubspace::image_of(&embed(&fr, &ambient).map_err(text)?.blocks);
                ensure(is_subrepresentation(&u, &ambient.rep), || format!("(m, q) = ({m}, {q}): embedded point is not invariant"))?;
                let residuals = evaluate_equations(&eqs, &coordinates_for(&eqs, &u).map_err(text)?).map_err(text)?;
                ensure(residuals.is_empty(), || format!("(m, q) = ({m}, {q}): invariant point has residuals"))?;
                solutions += 1;
            }
            let mut violated = 0;
            for _ in 0..100 {
                let u = GradedSubspace::new(vec![m * q], vec![full_rank(&mut rng, m * q, m)]).map_err(text)?;
                let residuals = evaluate_equations(&eqs, &coordinates_for(&eqs, &u).map_err(text)?).map_err(text)?;
                let invariant = is_subrepresentation(&u, &ambient.rep);
                ensure(residuals.is_empty() == invariant, || format!("(m, q) = ({m}, {q}): equations and invariance disagree"))?;
                violated += usize::from(!invariant);
            }
            if m == 1 {
                ensure(eqs.equations.is_empty() && violated == 0, || format!("m = 1, q = {q} imposes a condition"))?;
            } else if q > 1 {
                ensure(violated == 100, || format!("(m, q) = ({m}, {q}): only {violated} generic planes violate"))?;
            }
            violations += violated;
        }
    }
    Ok(format!("{solutions} invariant points solve, {violations} generic planes violate, m = 1 unconstrained"))
}

fn generic_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-1000..=1000)))
}

fn two_cycle_oracle(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1101));
    let mut summary = Vec::new();
    for alpha in [vec![1, 1], vec![2, 2]] {
        for lambda in [int(0), int(1)] {
            let spec = CyclicQuiverSpec::new(2, alpha.clone(), vec![1, 1]).map_err(text)?;
            let eqs = cyclic_pluecker_equations(&spec, &lambda).map_err(text)?;
            let rd = RootData::new(vec![(lambda.clone(), alpha.clone())]);
            let ambient = FiberAmbient::new(&spec, &rd).map_err(text)?;
            let mut nonzero = 0;
            for _ in 0..100 {
                let fr = sample_stable_pair(&spec, &rd, &mut rng, 50).map_err(text)?;
                let blocks = embed(&fr, &ambient).map_err(text)?.blocks;
                let u = GradedSubspace::image_of(&blocks);
                let residuals = evaluate_equations(&eqs, &coordinates_for(&eqs, &u).map_err(text)?).map_err(text)?;
                ensure(residuals.is_empty(), || format!("α = {alpha:?}, λ = {lambda}: submodule point has residuals"))?;
                let moved: Vec<Matrix> = blocks
                    .iter()
                    .map(|b| loop {
                        let m = b + &generic_matrix(&mut rng, b.rows(), b.cols());
                        if m.rank() == m.cols() {
                            break m;
                        }
                    })
                    .collect();
                let w = GradedSubspace::image_of(&moved);
                let residuals = evaluate_equations(&eqs, &coordinates_for(&eqs, &w).map_err(text)?).map_err(text)?;
                ensure(residuals.is_empty() == is_subrepresentation(&w, &ambient.rep), || {
                    format!("α = {alpha:?}, λ = {lambda}: residuals disagree with the submodule test")
                })?;
                nonzero += usize::from(!residuals.is_empty());
            }
            ensure(nonzero >= 95, || format!("α = {alpha:?}, λ = {lambda}: only {nonzero} of 100 perturbations detected"))?;
            summary.push(format!("{nonzero}/100"));
        }
    }
    Ok(format!("residuals vanish on submodules; perturbations detected {}", summary.join(", ")))
}

fn random_root_data(rng: &mut ChaCha8Rng, n: usize) -> RootData {
    let mut roots = Vec::new();
    let zero: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    if zero.iter().any(|&m| m > 0) {
        roots.push((int(0), zero));
    }
    let mut used: Vec<Scalar> = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let lambda = algebra_core::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=2));
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

fn nonzero_roots(chi: &Poly) -> Vec<(Scalar, usize)> {
    chi.rational_roots().0.into_iter().filter(|(l, _)| !l.is_zero()).collect()
}

fn cycle_roots(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1201));
    let mut with_roots = 0;
    let cases = 120;
    for case in 0..cases {
        let n = rng.gen_range(1..=4);
        let x = if case % 2 == 0 {
            let rd = random_root_data(&mut rng, n);
            let alpha = (0..n).map(|i| rd.roots.iter().map(|(_, r)| r[i]).sum()).collect();
            let spec = CyclicQuiverSpec::new(n, alpha, vec![1; n]).map_err(text)?;
            sample_cyclic_representation(&spec, &rd, &mut rng).map_err(text)?
        } else {
            let alpha: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
            sample_free(&cyclic_fibers::cycle_quiver(n), &alpha, &mut rng).map_err(text)?
        };
        let chis = char_polys(&x);
        let reference = nonzero_roots(&chis[0]);
        with_roots += usize::from(!reference.is_empty());
        for (i, chi) in chis.iter().enumerate().skip(1) {
            ensure(nonzero_roots(chi) == reference, || format!("case {case}: vertex {} differs from vertex 1", i + 1))?;
        }
    }
    ensure(with_roots >= 50, || format!("only {with_roots} cases with nonzero roots"))?;
    Ok(format!("{cases} cyclic representations ({with_roots} with nonzero roots), zero failures"))
}

fn two_loop_chain() -> Quiver {
    Quiver::from_triples(
        5,
        &[("a1'", 1, 2), ("a1''", 1, 2), ("b", 2, 2), ("a2", 2, 3), ("a3", 3, 4), ("c", 4, 4), ("a4", 4, 5)],
    )
    .expect("valid quiver")
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

/// Two distinct roots of one loop with multiplicity 1 or 2 each.
fn two_roots(rng: &mut ChaCha8Rng) -> Roots {
    let mut values = vec![int(0), int(1), int(-2), int(3)];
    values.shuffle(rng);
    values.into_iter().take(2).map(|l| (l, vec![rng.gen_range(1..=2)])).collect()
}

fn spade_round_trip(bundle: &SpadeBundle, fr: &FramedRep) -> Result<(), String> {
    let d = &bundle.decomposition;
    let map = bundle.embed(fr).map_err(text)?;
    ensure(map.is_intertwiner(fr.rep(), &bundle.flatten()) && map.is_injective(), || "embedding is not an injective map".into())?;
    let point = bundle.spade_point(&map.blocks);
    ensure(point.dims() == bundle.alpha_tilde, || format!("point has dimension {:?}", point.dims()))?;
    ensure(is_subrepresentation(&point, &bundle.w_spade), || "point is not a submodule of W♠".into())?;
    let (back, bases) = bundle.recover(&point).map_err(text)?;
    ensure(is_stable(&back), || "recovered pair is unstable".into())?;
    ensure(cycle_char_polys(back.rep(), d) == bundle.roots.char_polys(d), || "characteristic polynomials differ from y".into())?;
    ensure(bundle.embed(&back).map_err(text)?.blocks == bases, || "recovered pair does not embed as its point".into())?;
    ensure(bases.iter().zip(&map.blocks).all(|(b, m)| b.column_echelon() == m.column_echelon()), || "column spans moved".into())
}

fn spade_suite(seed: u64) -> Check {
    let d = detect_successive(&two_loop_chain()).map_err(text)?;
    let mrd = chain_roots(vec![(int(1), vec![1]), (int(2), vec![1])], vec![(int(-1), vec![1]), (int(3), vec![1])], [1, 1, 1]);
    let bundle = build_spade(&d, &mrd, &[1; 5]).map_err(text)?;
    ensure(bundle.names == ["1", "2_1", "2_2", "3", "4_1", "4_2", "5"], || format!("vertices {:?}", bundle.names))?;
    let name = |v: usize| bundle.names[v - 1].as_str();
    let arrows: Vec<(&str, &str, &str)> =
        bundle.spade_quiver.arrows().iter().map(|a| (a.id.as_str(), name(a.tail), name(a.head))).collect();
    let expected = [
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
    ];
    ensure(arrows == expected, || format!("arrows {arrows:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1301));
    let mut cases = 0;
    for _ in 0..400 {
        if cases == 20 {
            break;
        }
        let mrd = chain_roots(two_roots(&mut rng), two_roots(&mut rng), [1, rng.gen_range(0..=1), 1]);
        let bundle = build_spade(&d, &mrd, &[1; 5]).map_err(text)?;
        let Ok(fr) = sample_stable_successive(&d, &mrd, &[1; 5], &mut rng, 20) else { continue };
        spade_round_trip(&bundle, &fr).map_err(|e| format!("round trip {cases}: {e}"))?;
        cases += 1;
    }
    ensure(cases >= 20, || format!("only {cases} stable samples"))?;

    let remark = cyclic_specialization()?;
    Ok(format!("7 vertices and 14 arrows as listed, {cases} round trips, {remark} cyclic cases split into strings"))
}

/// On a single cycle W♠ is the sum of the string modules J(λ_l, r_l), up to relabelling.
fn cyclic_specialization() -> Result<usize, String> {
    let cases: Vec<(usize, Roots, Vec<usize>)> = vec![
        (3, vec![(int(0), vec![1, 2, 1]), (int(2), vec![1, 1, 1])], vec![1, 2, 1]),
        (2, vec![(int(-1), vec![2, 2]), (int(5), vec![1, 1])], vec![1, 1]),
        (1, vec![(int(4), vec![3])], vec![2]),
        (1, vec![(int(0), vec![2]), (int(1), vec![1])], vec![2]),
    ];
    for (n, roots, zeta) in &cases {
        let n = *n;
        let d = detect_successive(&cyclic_fibers::cycle_quiver(n)).map_err(text)?;
        let bundle = build_spade(&d, &MultiRootData::new(vec![RootData::new(roots.clone())]), zeta).map_err(text)?;
        ensure(bundle.vertices.len() == n * roots.len(), || format!("n = {n}: {} spade vertices", bundle.vertices.len()))?;
        ensure(
            bundle.spade_quiver.arrows().iter().all(|a| bundle.vertices[a.tail - 1].root == bundle.vertices[a.head - 1].root),
            || format!("n = {n}: an arrow joins different copies"),
        )?;
        for (l, (lambda, r)) in roots.iter().enumerate() {
            let spec = CyclicQuiverSpec::new(n, r.clone(), zeta.clone()).map_err(text)?;
            let j = build_j_lambda(&spec, lambda, r).map_err(text)?;
            let spade = |v: usize| bundle.vertices.iter().position(|sv| *sv == SpadeVertex { vertex: v, root: Some(l) });
            let perm = |v: usize| -> Result<Vec<usize>, String> {
                let k = spade(v).ok_or("missing spade vertex")?;
                bundle.labels[k]
                    .iter()
                    .map(|label| match (label.path.is_empty(), label.factors.first()) {
                        (true, Some(Some((root, s)))) if *root == l => {
                            Ok(j.position(&StringLabel { q: label.target, copy: label.copy, s: *s }))
                        }
                        _ => Err("a label leaves its string".to_string()),
                    })
                    .collect()
            };
            for i in 1..=n {
                let tail = spade(i).ok_or("missing spade vertex")? + 1;
                let k = (0..bundle.lifts.len())
                    .find(|&k| bundle.lifts[k] == i - 1 && bundle.spade_quiver.arrow(k).tail == tail)
                    .ok_or("missing lifted arrow")?;
                let (ours, theirs) = (bundle.w_spade.matrix(k), j.rep.matrix(i - 1));
                let (rows, cols) = (perm(i % n + 1)?, perm(i)?);
                ensure(ours.rows() == theirs.rows() && ours.cols() == theirs.cols(), || format!("n = {n}: shapes differ"))?;
                for (a, &ra) in rows.iter().enumerate() {
                    for (b, &cb) in cols.iter().enumerate() {
                        ensure(ours.get(a, b) == theirs.get(ra, cb), || format!("n = {n}, root {l}: arrow {i} differs"))?;
                    }
                }
            }
        }
    }
    Ok(cases.len())
}

fn cycle_simple_framings(_: u64) -> Check {
    let q = catalog::jordan_quiver();
    let qj = quiver_arg(&q, None);
    let rep = |a: &str| format!(r#"{{"dims": [2], "matrices": {{"a": {a}}}}}"#);
    let (code, out) = cli(&["framing-exists", "--quiver", &qj, "--rep", &rep(r#"[["1","0"],["0","2"]]"#), "--zeta", "[1]"])?;
    let distinct: FramingReport = parse(&out)?;
    ensure(code == 0 && distinct.exists, || "diag(1,2) has no stable framing".into())?;
    let witness = distinct.witness.ok_or("no witness for diag(1,2)")?.framed(&q, None).map_err(text)?;
    ensure(is_stable(&witness), || "witness for diag(1,2) is unstable".into())?;
    let (code, out) = cli(&["framing-exists", "--quiver", &qj, "--rep", &rep(r#"[["1","0"],["0","1"]]"#), "--zeta", "[1]"])?;
    let repeated: FramingReport = parse(&out)?;
    ensure(code == 1 && !repeated.exists, || "diag(1,1) admits a stable framing".into())?;
    ensure(
        repeated.cycle_simples.len() == 1 && repeated.cycle_simples[0].multiplicity == 2 && repeated.cycle_simples[0].available == 1,
        || format!("diag(1,1) socle report {:?}", repeated.cycle_simples),
    )?;

    let d = detect_successive(&q).map_err(text)?;
    let direct = framing_existence_cyclic(&Representation::new(q.clone(), vec![2], vec![Matrix::identity(2)]).map_err(text)?, &d, &[1])
        .map_err(text)?;
    ensure(direct == (false, None), || "library and command line disagree on diag(1,1)".into())?;

    for (n, zeta) in [(1, vec![2]), (2, vec![1, 2]), (3, vec![2, 1, 1])] {
        let d = detect_successive(&cyclic_fibers::cycle_quiver(n)).map_err(text)?;
        let roots = RootData::new(vec![(int(0), vec![2; n]), (int(3), vec![1; n]), (int(-1), vec![2; n])]);
        let bundle = build_spade(&d, &MultiRootData::new(vec![roots]), &zeta).map_err(text)?;
        let report = cyclic_socle_multiplicities(&bundle.flatten(), &d).map_err(text)?;
        let total: usize = zeta.iter().sum();
        ensure(report.vertex_simples == zeta, || format!("n = {n}: S(i) multiplicities {:?}", report.vertex_simples))?;
        let counts: BTreeMap<Scalar, usize> = report.cycle_simples.iter().map(|(_, l, m)| (l.clone(), *m)).collect();
        ensure(counts == BTreeMap::from([(int(-1), total), (int(3), total)]), || format!("n = {n}: S(τ, λ) multiplicities {counts:?}"))?;
        ensure(ambient_socle_multiplicities(&d, &zeta, &report) == report, || format!("n = {n}: ambient report differs"))?;
    }
    Ok("diag(1,2) framed by a line, diag(1,1) not; ambient socle has S(i) ↦ ζ_i and S(τ, λ) ↦ Σζ".into())
}
