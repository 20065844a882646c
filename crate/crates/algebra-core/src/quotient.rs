//! The truncated quotient kQ/(⟨ρ⟩ + paths of length ≥ N) with a path basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::matrix::Matrix;
use crate::quiver::{compose_paths, LinComb, Path, Quiver, VertexId};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    relations: Vec<LinComb>,
    nilpotency_bound: usize,
}

impl RelationSet {
    pub fn new(relations: Vec<LinComb>, nilpotency_bound: usize) -> Result<Self, AlgebraError> {
        if nilpotency_bound < 2 {
            return Err(AlgebraError::BoundTooSmall(nilpotency_bound));
        }
        for r in &relations {
            if let Some(short) = r.terms().map(|(p, _)| p.len()).find(|&l| l < 2) {
                return Err(AlgebraError::ShortRelationTerm(short));
            }
        }
        Ok(RelationSet { relations, nilpotency_bound })
    }

    pub fn relations(&self) -> &[LinComb] {
        &self.relations
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency_bound
    }

    /// Longest relation term, or 0 without relations.
    pub fn max_term_length(&self) -> usize {
        self.relations.iter().filter_map(LinComb::max_length).max().unwrap_or(0)
    }

    /// Each relation split into its components e_t·r·e_s.
    fn homogeneous_pieces(&self) -> Vec<LinComb> {
        self.relations.iter().flat_map(|r| r.components().into_values()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct QuotientAlgebraBasis {
    quiver: Quiver,
    bound: usize,
    max_relation_length: usize,
    basis: Vec<Path>,
    table: BTreeMap<Path, LinComb>,
}

/// Row-reduced span of the truncated ideal inside one Peirce component.
struct ComponentSpan {
    /// Component paths in descending canonical order (the column order).
    columns: Vec<Path>,
    reduced: Matrix,
    pivots: Vec<usize>,
}

fn ideal_spans(q: &Quiver, rho: &RelationSet, limit: usize) -> BTreeMap<(VertexId, VertexId), ComponentSpan> {
    let all = q.paths_below(limit);
    let mut by_component: BTreeMap<(VertexId, VertexId), Vec<Path>> = BTreeMap::new();
    for p in &all {
        by_component.entry((p.source, p.target)).or_default().push(p.clone());
    }
    let mut generators: BTreeMap<(VertexId, VertexId), Vec<LinComb>> = BTreeMap::new();
    for piece in rho.homogeneous_pieces() {
        let Some((first, _)) = piece.terms().next() else { continue };
        let (s, t) = (first.source, first.target);
        let min_len = piece.min_length().unwrap_or(0);
        for outer in all.iter().filter(|u| u.source == t) {
            for inner in all.iter().filter(|v| v.target == s) {
                if outer.len() + inner.len() + min_len >= limit {
                    continue;
                }
                let g = piece.sandwich(outer, inner, limit);
                if !g.is_zero() {
                    generators.entry((inner.source, outer.target)).or_default().push(g);
                }
            }
        }
    }
    let mut spans = BTreeMap::new();
    for (key, mut paths) in by_component {
        paths.sort_by(|a, b| q.canonical_cmp(b, a));
        let position: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let gens = generators.remove(&key).unwrap_or_default();
        let mut m = Matrix::zeros(gens.len(), paths.len());
        for (row, g) in gens.iter().enumerate() {
            for (p, x) in g.terms() {
                m.set(row, position[p], x.clone());
            }
        }
        let (reduced, pivots) = m.rref();
        spans.insert(key, ComponentSpan { columns: paths, reduced, pivots });
    }
    spans
}

/// Builds the greedy path basis Ξ and the normal-form table.
pub fn build_quotient_basis(q: &Quiver, rho: &RelationSet) -> Result<QuotientAlgebraBasis, AlgebraError> {
    let bound = rho.nilpotency_bound();
    let spans = ideal_spans(q, rho, bound);
    let mut basis = Vec::new();
    let mut table = BTreeMap::new();
    for span in spans.values() {
        for (col, p) in span.columns.iter().enumerate() {
            if let Some(row) = span.pivots.iter().position(|&c| c == col) {
                // p reduces to minus the rest of its row, which only involves smaller basis paths.
                let mut nf = LinComb::zero();
                for (c2, other) in span.columns.iter().enumerate().skip(col + 1) {
                    let x = span.reduced.get(row, c2);
                    if !x.is_zero() {
                        nf.add_term(other.clone(), -x.clone());
                    }
                }
                table.insert(p.clone(), nf);
            } else {
                basis.push(p.clone());
                table.insert(p.clone(), LinComb::from_path(p.clone()));
            }
        }
    }
    basis.sort_by(|a, b| q.canonical_cmp(a, b));
    Ok(QuotientAlgebraBasis {
        quiver: q.clone(),
        bound,
        max_relation_length: rho.max_term_length(),
        basis,
        table,
    })
}

/// Truncated sufficient test that every path of length N lies in the ideal generated by ρ.
pub fn verify_regular_ideal(q: &Quiver, rho: &RelationSet) -> bool {
    let bound = rho.nilpotency_bound();
    let limit = bound + rho.max_term_length();
    let long_paths = q.paths_of_length(bound);
    if long_paths.is_empty() {
        return true;
    }
    if limit <= bound {
        return false;
    }
    let spans = ideal_spans(q, rho, limit);
    long_paths.iter().all(|p| {
        let span = &spans[&(p.source, p.target)];
        let col = span.columns.iter().position(|c| c == p).expect("path enumerated in its component");
        let rank = span.pivots.len();
        let mut probe = Matrix::zeros(rank + 1, span.columns.len());
        probe.set_block(0, 0, &span.reduced.select_rows(&(0..rank).collect::<Vec<_>>()));
        probe.set(rank, col, Scalar::from_integer(1.into()));
        probe.rank() == rank
    })
}

impl QuotientAlgebraBasis {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.bound
    }

    pub fn table_length_limit(&self) -> usize {
        self.bound + self.max_relation_length
    }

    pub fn basis_paths(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis paths from `source` to `target` (the component e_target·A·e_source).
    pub fn peirce_component(&self, source: VertexId, target: VertexId) -> Vec<Path> {
        self.basis.iter().filter(|p| p.source == source && p.target == target).cloned().collect()
    }

    pub fn basis_from(&self, source: VertexId) -> Vec<Path> {
        self.basis.iter().filter(|p| p.source == source).cloned().collect()
    }

    pub fn normal_form_path(&self, p: &Path) -> LinComb {
        if p.len() >= self.bound {
            return LinComb::zero();
        }
        self.table.get(p).cloned().unwrap_or_else(LinComb::zero)
    }

    pub fn normal_form(&self, x: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (p, c) in x.terms() {
            out.add_scaled(&self.normal_form_path(p), c);
        }
        out
    }

    /// Normal form of the product x·y ("y first, then x").
    pub fn multiply(&self, x: &LinComb, y: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (p, a) in x.terms() {
            for (r, b) in y.terms() {
                if let Some(pr) = compose_paths(p, r) {
                    out.add_scaled(&self.normal_form_path(&pr), &(a * b));
                }
            }
        }
        out
    }

    /// The identity Σ e_i.
    pub fn unit(&self) -> LinComb {
        LinComb::from_terms(self.quiver.vertices().map(|v| (Path::trivial(v), Scalar::from_integer(1.into()))))
    }

    pub fn path_names(&self) -> Vec<String> {
        self.basis.iter().map(|p| self.quiver.path_name(p)).collect()
    }
}
