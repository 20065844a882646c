//! Quivers, paths and formal linear combinations of paths.
//!
//! A path stores its arrows in composition order: the last arrow of the
//! list is applied first, so `[a2, a1]` is the path `a2a1` that starts at
//! the tail of `a1`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// Vertices are numbered `1..=n`.
pub type VertexId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub tail: VertexId,
    pub head: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    index: HashMap<String, usize>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        let mut index = HashMap::new();
        for (k, a) in arrows.iter().enumerate() {
            for v in [a.tail, a.head] {
                if v == 0 || v > vertex_count {
                    return Err(AlgebraError::UnknownVertex { arrow: a.id.clone(), vertex: v });
                }
            }
            if index.insert(a.id.clone(), k).is_some() {
                return Err(AlgebraError::DuplicateArrow(a.id.clone()));
            }
        }
        Ok(Quiver { vertex_count, arrows, index })
    }

    /// Convenience constructor from `(id, tail, head)` triples.
    pub fn from_triples(vertex_count: usize, triples: &[(&str, VertexId, VertexId)]) -> Result<Self, AlgebraError> {
        let arrows = triples
            .iter()
            .map(|&(id, tail, head)| Arrow { id: id.to_string(), tail, head })
            .collect();
        Quiver::new(vertex_count, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, k: usize) -> &Arrow {
        &self.arrows[k]
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn outgoing(&self, v: VertexId) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&k| self.arrows[k].tail == v).collect()
    }

    pub fn incoming(&self, v: VertexId) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&k| self.arrows[k].head == v).collect()
    }

    pub fn arrow_path(&self, k: usize) -> Path {
        let a = &self.arrows[k];
        Path { source: a.tail, target: a.head, arrows: vec![k] }
    }

    /// Builds a path from arrow ids written in composition order.
    pub fn path_from_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<Path, AlgebraError> {
        let mut path: Option<Path> = None;
        for id in ids.iter().rev() {
            let k = self
                .arrow_index(id.as_ref())
                .ok_or_else(|| AlgebraError::UnknownArrow(id.as_ref().to_string()))?;
            let step = self.arrow_path(k);
            path = Some(match path {
                None => step,
                Some(p) => compose_paths(&step, &p).ok_or_else(|| AlgebraError::NotComposable(self.ids_joined(ids)))?,
            });
        }
        path.ok_or(AlgebraError::EmptyPath)
    }

    fn ids_joined<S: AsRef<str>>(&self, ids: &[S]) -> String {
        ids.iter().map(|s| s.as_ref()).collect::<Vec<_>>().join("")
    }

    pub fn arrow_ids(&self, p: &Path) -> Vec<&str> {
        p.arrows.iter().map(|&k| self.arrows[k].id.as_str()).collect()
    }

    /// `e{v}` for trivial paths, otherwise the concatenated arrow ids.
    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e{}", p.source)
        } else {
            self.arrow_ids(p).concat()
        }
    }

    /// Canonical order: by length, then lexicographically by arrow ids.
    pub fn canonical_cmp(&self, a: &Path, b: &Path) -> Ordering {
        a.len()
            .cmp(&b.len())
            .then_with(|| self.arrow_ids(a).cmp(&self.arrow_ids(b)))
            .then_with(|| a.source.cmp(&b.source))
    }

    /// All paths of exactly the given length.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut layer: Vec<Path> = self.vertices().map(Path::trivial).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &layer {
                for k in self.outgoing(p.target) {
                    if let Some(q) = compose_paths(&self.arrow_path(k), p) {
                        next.push(q);
                    }
                }
            }
            layer = next;
        }
        layer.sort_by(|a, b| self.canonical_cmp(a, b));
        layer
    }

    /// All paths of length strictly below `limit`, in canonical order.
    pub fn paths_below(&self, limit: usize) -> Vec<Path> {
        (0..limit).flat_map(|len| self.paths_of_length(len)).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.paths_of_length(self.vertex_count).is_empty()
    }
}

/// A path; `arrows` index into the owning quiver's arrow list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// The product `outer·inner` ("inner first, then outer"), or None when the ends do not meet.
pub fn compose_paths(outer: &Path, inner: &Path) -> Option<Path> {
    if inner.target != outer.source {
        return None;
    }
    let mut arrows = outer.arrows.clone();
    arrows.extend_from_slice(&inner.arrows);
    Some(Path { source: inner.source, target: outer.target, arrows })
}

/// A finite linear combination of paths with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinComb {
    terms: BTreeMap<Path, Scalar>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn from_path(p: Path) -> Self {
        let mut c = LinComb::zero();
        c.add_term(p, Scalar::from_integer(1.into()));
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Path, Scalar)>) -> Self {
        let mut c = LinComb::zero();
        for (p, x) in terms {
            c.add_term(p, x);
        }
        c
    }

    pub fn add_term(&mut self, p: Path, coef: Scalar) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert_with(Scalar::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, factor: &Scalar) {
        for (p, x) in &other.terms {
            self.add_term(p.clone(), x * factor);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_length(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    pub fn max_length(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).max()
    }

    /// Splits into components with a common source and target.
    pub fn components(&self) -> BTreeMap<(VertexId, VertexId), LinComb> {
        let mut out: BTreeMap<(VertexId, VertexId), LinComb> = BTreeMap::new();
        for (p, x) in &self.terms {
            out.entry((p.source, p.target)).or_default().add_term(p.clone(), x.clone());
        }
        out
    }

    /// `outer·self·inner` with terms of length at least `limit` dropped.
    pub fn sandwich(&self, outer: &Path, inner: &Path, limit: usize) -> LinComb {
        let mut out = LinComb::zero();
        for (p, x) in &self.terms {
            if outer.len() + p.len() + inner.len() >= limit {
                continue;
            }
            if let Some(left) = compose_paths(outer, p) {
                if let Some(full) = compose_paths(&left, inner) {
                    out.add_term(full, x.clone());
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> Quiver {
        Quiver::from_triples(3, &[("a1", 1, 2), ("a2", 2, 3)]).unwrap()
    }

    #[test]
    fn identity_path_law() {
        let q = chain();
        let a1 = q.arrow_path(0);
        assert_eq!(compose_paths(&Path::trivial(2), &a1), Some(a1.clone()));
        assert_eq!(compose_paths(&a1, &Path::trivial(1)), Some(a1));
    }

    #[test]
    fn composition_follows_arrow_order() {
        let q = chain();
        let a1 = q.arrow_path(0);
        let a2 = q.arrow_path(1);
        let p = compose_paths(&a2, &a1).unwrap();
        assert_eq!(q.path_name(&p), "a2a1");
        assert_eq!((p.source, p.target), (1, 3));
        assert_eq!(compose_paths(&a1, &a2), None);
        assert_eq!(q.path_from_ids(&["a2", "a1"]).unwrap(), p);
        assert!(q.path_from_ids(&["a1", "a2"]).is_err());
    }

    #[test]
    fn rejects_bad_quivers() {
        assert!(Quiver::from_triples(2, &[("a", 1, 3)]).is_err());
        assert!(Quiver::from_triples(2, &[("a", 1, 2), ("a", 2, 1)]).is_err());
    }

    #[test]
    fn enumerates_paths_canonically() {
        let q = chain();
        let names: Vec<String> = q.paths_below(3).iter().map(|p| q.path_name(p)).collect();
        assert_eq!(names, ["e1", "e2", "e3", "a1", "a2", "a2a1"]);
        assert!(q.is_acyclic());
        let loop_q = Quiver::from_triples(1, &[("a", 1, 1)]).unwrap();
        assert!(!loop_q.is_acyclic());
    }

    #[test]
    fn lincomb_cancels_terms() {
        let q = chain();
        let mut c = LinComb::from_path(q.arrow_path(0));
        c.add_term(q.arrow_path(0), Scalar::from_integer((-1).into()));
        assert!(c.is_zero());
    }
}
