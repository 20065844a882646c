//! Multihomogeneous equation sets in Plücker coordinates cutting out submodule Grassmannians.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use algebra_core::{format_scalar, int, Matrix, Scalar, VertexId};
use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::FiberError;
use crate::jlambda::{build_j_lambda, JLambdaModule, StringLabel};
use crate::spec::CyclicQuiverSpec;

/// Origin of an equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquationTag {
    Plucker,
    Vanishing,
    ShiftSum,
    Proportionality,
    CrossVertex,
}

impl EquationTag {
    pub fn as_str(self) -> &'static str {
        match self {
            EquationTag::Plucker => "plucker",
            EquationTag::Vanishing => "vanishing",
            EquationTag::ShiftSum => "shift-sum",
            EquationTag::Proportionality => "proportionality",
            EquationTag::CrossVertex => "cross-vertex",
        }
    }
}

impl fmt::Display for EquationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EquationTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            EquationTag::Plucker,
            EquationTag::Vanishing,
            EquationTag::ShiftSum,
            EquationTag::Proportionality,
            EquationTag::CrossVertex,
        ]
        .into_iter()
        .find(|t| t.as_str() == s)
        .ok_or_else(|| format!("unknown equation tag {s:?}"))
    }
}

/// The coordinate p^{(vertex)}_{indices}, indices increasing and 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coordinate {
    pub vertex: VertexId,
    pub indices: Vec<usize>,
}

/// A monomial is a sorted list of coordinates.
pub type Monomial = Vec<Coordinate>;

/// Sparse polynomial in Plücker coordinates.
pub type Polynomial = BTreeMap<Monomial, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub tag: EquationTag,
    pub terms: Vec<(Scalar, Monomial)>,
}

impl Equation {
    pub fn polynomial(&self) -> Polynomial {
        self.terms.iter().map(|(c, m)| (m.clone(), c.clone())).collect()
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(_, m)| m.len()).max().unwrap_or(0)
    }
}

/// Dimension N and exterior degree m of the Plücker space at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexAmbient {
    pub vertex: VertexId,
    pub dim: usize,
    pub degree: usize,
}

impl VertexAmbient {
    /// dim ⋀^m of an N-dimensional space.
    pub fn exterior_dim(&self) -> usize {
        (0..self.degree).fold(1usize, |acc, t| acc * (self.dim - t) / (t + 1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSet {
    pub ambient: Vec<VertexAmbient>,
    pub equations: Vec<Equation>,
    /// Flat index k (1-based, stored at k − 1) ↦ string label, shared by all vertices.
    pub index_map: Vec<StringLabel>,
}

impl EquationSet {
    pub fn with_tag(&self, tag: EquationTag) -> impl Iterator<Item = &Equation> {
        self.equations.iter().filter(move |e| e.tag == tag)
    }

    pub fn ambient_at(&self, v: VertexId) -> Option<&VertexAmbient> {
        self.ambient.iter().find(|a| a.vertex == v)
    }

    /// True when every index lies within its vertex's ambient bounds.
    pub fn is_in_bounds(&self) -> bool {
        self.equations.iter().flat_map(|e| &e.terms).flat_map(|(_, m)| m).all(|c| {
            self.ambient_at(c.vertex).is_some_and(|a| {
                c.indices.len() == a.degree && c.indices.iter().all(|&k| (1..=a.dim).contains(&k))
            })
        })
    }
}

/// p with an arbitrary index list: zero when an index is out of range or repeated, otherwise the
/// sorted coordinate with the sign of the sorting permutation.
fn antisymmetrize(vertex: VertexId, raw: &[usize], dim: usize) -> Option<(bool, Coordinate)> {
    if raw.iter().any(|&k| k == 0 || k > dim) {
        return None;
    }
    let mut sorted = raw.to_vec();
    let mut negative = false;
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((negative, Coordinate { vertex, indices: sorted }))
}

/// Accumulates Σ coef·∏ p^{(v)}_{raw}, antisymmetrizing each factor.
#[derive(Default)]
struct Builder {
    poly: Polynomial,
}

impl Builder {
    fn add(&mut self, coef: Scalar, factors: &[(VertexId, &[usize], usize)]) {
        if coef.is_zero() {
            return;
        }
        let mut coef = coef;
        let mut monomial = Vec::with_capacity(factors.len());
        for &(v, raw, dim) in factors {
            let Some((negative, c)) = antisymmetrize(v, raw, dim) else { return };
            if negative {
                coef = -coef;
            }
            monomial.push(c);
        }
        monomial.sort();
        let slot = self.poly.entry(monomial).or_insert_with(Scalar::zero);
        *slot += coef;
    }

    fn finish(self) -> Option<Polynomial> {
        normalize(self.poly)
    }
}

/// Drops zero terms and scales so the leading coefficient is 1; None for the zero polynomial.
pub fn normalize(poly: Polynomial) -> Option<Polynomial> {
    let poly: Polynomial = poly.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let lead = poly.values().next()?.clone();
    Some(poly.into_iter().map(|(m, c)| (m, c / &lead)).collect())
}

/// Collects normalized equations, skipping duplicates within a family.
#[derive(Default)]
struct Collector {
    seen: BTreeSet<(EquationTag, Vec<(Monomial, Scalar)>)>,
    equations: Vec<Equation>,
}

impl Collector {
    fn push(&mut self, tag: EquationTag, builder: Builder) {
        let Some(poly) = builder.finish() else { return };
        let key: Vec<(Monomial, Scalar)> = poly.clone().into_iter().collect();
        if self.seen.insert((tag, key)) {
            let terms = poly.into_iter().map(|(m, c)| (c, m)).collect();
            self.equations.push(Equation { tag, terms });
        }
    }
}

fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).combinations(k)
}

/// Plücker relations Σ_l (−1)^l p_{I ∪ j_l} p_{J ∖ j_l} on ⋀^m of an N-dimensional space.
fn pluecker_relations(out: &mut Collector, v: VertexId, dim: usize, m: usize) {
    if m == 0 || m >= dim {
        return;
    }
    for i in tuples(dim, m - 1) {
        for j in tuples(dim, m + 1) {
            let mut b = Builder::default();
            for l in 0..j.len() {
                let mut left = i.clone();
                left.push(j[l]);
                let right: Vec<usize> = j.iter().enumerate().filter(|&(t, _)| t != l).map(|(_, &x)| x).collect();
                let sign = if l % 2 == 0 { int(1) } else { int(-1) };
                b.add(sign, &[(v, &left, dim), (v, &right, dim)]);
            }
            out.push(EquationTag::Plucker, b);
        }
    }
}

/// p_I = 0 when some i_j exceeds Q·j.
fn vanishing_relations(out: &mut Collector, v: VertexId, dim: usize, m: usize, strings: usize) {
    for i in tuples(dim, m) {
        if i.iter().enumerate().any(|(j, &k)| k > strings * (j + 1)) {
            let mut b = Builder::default();
            b.add(int(1), &[(v, &i, dim)]);
            out.push(EquationTag::Vanishing, b);
        }
    }
}

/// Σ over nonzero ε ∈ {0,1}^m of p_{I + Qε} = 0: the derivative part of d/dt kills ω.
fn shift_sum_relations(out: &mut Collector, v: VertexId, dim: usize, m: usize, strings: usize) {
    for i in tuples(dim, m) {
        let mut b = Builder::default();
        for pattern in 1u64..(1u64 << m) {
            let shifted: Vec<usize> =
                i.iter().enumerate().map(|(t, &k)| if pattern >> t & 1 == 1 { k + strings } else { k }).collect();
            b.add(int(1), &[(v, &shifted, dim)]);
        }
        out.push(EquationTag::ShiftSum, b);
    }
}

fn invariance_relations(out: &mut Collector, v: VertexId, dim: usize, m: usize, strings: usize) {
    pluecker_relations(out, v, dim, m);
    vanishing_relations(out, v, dim, m, strings);
    shift_sum_relations(out, v, dim, m, strings);
}

/// Equations of the d/dt-invariant m-planes in J(λ, m) over the Jordan quiver with ζ = q.
pub fn jordan_pluecker_equations(m: usize, q: usize) -> EquationSet {
    let spec = CyclicQuiverSpec::new(1, vec![m], vec![q]).expect("one vertex");
    let j = build_j_lambda(&spec, &int(0), &[m.max(1)]).expect("nonzero order");
    let dim = j.dim();
    let mut out = Collector::default();
    invariance_relations(&mut out, 1, dim, m, q);
    EquationSet { ambient: vec![VertexAmbient { vertex: 1, dim, degree: m }], equations: out.equations, index_map: j.labels }
}

/// Equations of Grass_α(J(λ, α)) on the cyclic quiver: per-vertex invariance, then the cross-vertex
/// conditions a_i(U_i) ⊆ U_{i+1}.
pub fn cyclic_pluecker_equations(spec: &CyclicQuiverSpec, lambda: &Scalar) -> Result<EquationSet, FiberError> {
    let j = build_j_lambda(spec, lambda, &spec.alpha)?;
    let dim = j.dim();
    let strings = spec.string_count();
    let mut out = Collector::default();
    for v in 1..=spec.n {
        invariance_relations(&mut out, v, dim, spec.alpha[v - 1], strings);
    }
    if spec.n > 1 {
        for i in 1..=spec.n {
            let next = spec.next(i);
            let (mi, mn) = (spec.alpha[i - 1], spec.alpha[next - 1]);
            if !lambda.is_zero() && mi == mn {
                proportionality_relations(&mut out, &j, i, next, mi);
            } else {
                if lambda.is_zero() {
                    primed_relations(&mut out, &j, i, next, mi, mn);
                }
                contraction_relations(&mut out, j.rep.matrix(i - 1), i, next, dim, mi, mn);
            }
        }
    }
    let ambient = (1..=spec.n).map(|v| VertexAmbient { vertex: v, dim, degree: spec.alpha[v - 1] }).collect();
    Ok(EquationSet { ambient, equations: out.equations, index_map: j.labels })
}

/// (⋀a·p^{(i)})_I p^{(i+1)}_K − (⋀a·p^{(i)})_K p^{(i+1)}_I with (⋀a·p)_I = Σ_J det a[I, J] p_J.
fn proportionality_relations(out: &mut Collector, j: &JLambdaModule, i: VertexId, next: VertexId, m: usize) {
    let dim = j.dim();
    let a = j.rep.matrix(i - 1);
    let all: Vec<Vec<usize>> = tuples(dim, m).collect();
    let minor = |rows: &[usize], cols: &[usize]| -> Scalar {
        let r: Vec<usize> = rows.iter().map(|k| k - 1).collect();
        let c: Vec<usize> = cols.iter().map(|k| k - 1).collect();
        a.select_rows(&r).select_cols(&c).determinant()
    };
    for (x, big_i) in all.iter().enumerate() {
        for big_k in &all[x + 1..] {
            let mut b = Builder::default();
            for big_j in &all {
                b.add(minor(big_i, big_j), &[(i, big_j, dim), (next, big_k, dim)]);
                b.add(-minor(big_k, big_j), &[(i, big_j, dim), (next, big_i, dim)]);
            }
            out.push(EquationTag::Proportionality, b);
        }
    }
}

/// Σ_t (−1)^t Σ_l a[k_t, l] p^{(i)}_{j ∪ l} p^{(i+1)}_{K ∖ k_t} for j of size α_i − 1 and K of size α_{i+1} + 1.
fn contraction_relations(
    out: &mut Collector,
    a: &Matrix,
    i: VertexId,
    next: VertexId,
    dim: usize,
    mi: usize,
    mn: usize,
) {
    if mi == 0 {
        return;
    }
    for j in tuples(dim, mi - 1) {
        contraction_at(out, a, &j, i, next, dim, mn);
    }
}

fn contraction_at(out: &mut Collector, a: &Matrix, j: &[usize], i: VertexId, next: VertexId, dim: usize, mn: usize) {
    for big_k in tuples(dim, mn + 1) {
        let mut b = Builder::default();
        for (t, &k) in big_k.iter().enumerate() {
            let rest: Vec<usize> = big_k.iter().enumerate().filter(|&(s, _)| s != t).map(|(_, &x)| x).collect();
            let sign = if t % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            for l in 1..=dim {
                let c = a.get(k - 1, l - 1);
                if c.is_zero() {
                    continue;
                }
                let mut left = j.to_vec();
                left.push(l);
                b.add(&sign * c, &[(i, &left, dim), (next, &rest, dim)]);
            }
        }
        out.push(EquationTag::CrossVertex, b);
    }
}

/// The λ = 0 relations with every index of the contracted tuple primed, (q, r, s) ↦ (q, r, s+1) for
/// q = i; tuples without a full set of primes are skipped.
fn primed_relations(out: &mut Collector, j: &JLambdaModule, i: VertexId, next: VertexId, mi: usize, mn: usize) {
    if mi == 0 {
        return;
    }
    let dim = j.dim();
    for tuple in tuples(dim, mi - 1) {
        let primed: Option<Vec<usize>> = tuple.iter().map(|&k| j.primed(i, k - 1).map(|p| p + 1)).collect();
        if let Some(primed) = primed {
            contraction_at(out, j.rep.matrix(i - 1), &primed, i, next, dim, mn);
        }
    }
}

/// Linear members in reduced echelon form, and the remaining members with the linear relations
/// substituted, normalized and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSystem {
    pub linear: Vec<Polynomial>,
    pub nonlinear: Vec<Polynomial>,
}

pub fn reduce_by_linear(polys: &[Polynomial]) -> ReducedSystem {
    let is_linear = |p: &Polynomial| p.keys().all(|m| m.len() == 1);
    let variables: Vec<Coordinate> =
        polys.iter().filter(|p| is_linear(p)).flat_map(|p| p.keys().map(|m| m[0].clone())).collect::<BTreeSet<_>>().into_iter().collect();
    let rows: Vec<Vec<Scalar>> = polys
        .iter()
        .filter(|p| is_linear(p))
        .map(|p| variables.iter().map(|v| p.get(&vec![v.clone()]).cloned().unwrap_or_else(Scalar::zero)).collect())
        .collect();
    let (rref, pivots) = Matrix::from_rows(rows, variables.len()).expect("uniform rows").rref();
    let mut linear = Vec::new();
    let mut rules: BTreeMap<Coordinate, Polynomial> = BTreeMap::new();
    for (r, &p) in pivots.iter().enumerate() {
        let row: Polynomial = variables
            .iter()
            .enumerate()
            .filter(|(c, _)| !rref.get(r, *c).is_zero())
            .map(|(c, v)| (vec![v.clone()], rref.get(r, c).clone()))
            .collect();
        let rule: Polynomial = row.iter().filter(|(m, _)| m[0] != variables[p]).map(|(m, c)| (m.clone(), -c.clone())).collect();
        rules.insert(variables[p].clone(), rule);
        linear.push(row);
    }
    let mut seen = BTreeSet::new();
    let mut nonlinear = Vec::new();
    for p in polys.iter().filter(|p| !is_linear(p)) {
        let Some(reduced) = normalize(substitute(p, &rules)) else { continue };
        if seen.insert(reduced.clone()) {
            nonlinear.push(reduced);
        }
    }
    ReducedSystem { linear, nonlinear }
}

fn substitute(p: &Polynomial, rules: &BTreeMap<Coordinate, Polynomial>) -> Polynomial {
    let mut result = Polynomial::new();
    for (monomial, coef) in p {
        let mut partial: Polynomial = [(Vec::new(), coef.clone())].into_iter().collect();
        for factor in monomial {
            let replacement: Polynomial = match rules.get(factor) {
                Some(rule) => rule.clone(),
                None => [(vec![factor.clone()], Scalar::one())].into_iter().collect(),
            };
            let mut next = Polynomial::new();
            for (m1, c1) in &partial {
                for (m2, c2) in &replacement {
                    let mut m: Monomial = m1.iter().chain(m2).cloned().collect();
                    m.sort();
                    *next.entry(m).or_insert_with(Scalar::zero) += c1 * c2;
                }
            }
            partial = next;
        }
        for (m, c) in partial {
            *result.entry(m).or_insert_with(Scalar::zero) += c;
        }
    }
    result.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Human-readable form such as `p14^2 - p13p24` (vertex superscripts when several vertices occur).
pub fn format_polynomial(p: &Polynomial) -> String {
    let multi = p.keys().flatten().map(|c| c.vertex).collect::<BTreeSet<_>>().len() > 1;
    let name = |c: &Coordinate| {
        let sep = if c.indices.iter().any(|&k| k > 9) { "," } else { "" };
        let idx = c.indices.iter().map(ToString::to_string).join(sep);
        if multi {
            format!("p{}_{idx}", c.vertex)
        } else {
            format!("p{idx}")
        }
    };
    let mut out = String::new();
    for (n, (monomial, coef)) in p.iter().enumerate() {
        let negative = *coef < Scalar::zero();
        let magnitude = if negative { -coef.clone() } else { coef.clone() };
        if n == 0 {
            out.push_str(if negative { "-" } else { "" });
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() || monomial.is_empty() {
            out.push_str(&format_scalar(&magnitude));
        }
        for (c, group) in &monomial.iter().chunk_by(|c| (*c).clone()) {
            let power = group.count();
            out.push_str(&name(&c));
            if power > 1 {
                out.push_str(&format!("^{power}"));
            }
        }
    }
    out
}
