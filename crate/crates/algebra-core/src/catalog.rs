//! Small quivers with relations used throughout the workspace.

use crate::quiver::{LinComb, Quiver};
use crate::quotient::RelationSet;
use crate::scalar::int;

/// 1 → 2 → 3 with a2a1 = 0.
pub fn nakayama_chain() -> (Quiver, RelationSet) {
    let q = Quiver::from_triples(3, &[("a1", 1, 2), ("a2", 2, 3)]).expect("valid quiver");
    let r = LinComb::from_path(q.path_from_ids(&["a2", "a1"]).expect("path"));
    (q, RelationSet::new(vec![r], 2).expect("valid relations"))
}

/// One loop `a` with aⁿ = 0, i.e. k[x]/(xⁿ).
pub fn truncated_loop(n: usize) -> (Quiver, RelationSet) {
    let q = jordan_quiver();
    let r = LinComb::from_path(q.path_from_ids(&vec!["a"; n]).expect("path"));
    (q, RelationSet::new(vec![r], n).expect("valid relations"))
}

/// The square 1 ⇉ {2, 3} → 4 with a2a1 = b2b1.
pub fn commutative_square() -> (Quiver, RelationSet) {
    let q = Quiver::from_triples(4, &[("a1", 1, 2), ("a2", 2, 4), ("b1", 1, 3), ("b2", 3, 4)])
        .expect("valid quiver");
    let r = LinComb::from_terms([
        (q.path_from_ids(&["a2", "a1"]).expect("path"), int(1)),
        (q.path_from_ids(&["b2", "b1"]).expect("path"), int(-1)),
    ]);
    (q, RelationSet::new(vec![r], 3).expect("valid relations"))
}

/// One vertex with one loop `a`.
pub fn jordan_quiver() -> Quiver {
    Quiver::from_triples(1, &[("a", 1, 1)]).expect("valid quiver")
}

/// The oriented cycle a_i: i → i+1 (mod n) on n vertices.
pub fn cyclic_quiver(n: usize) -> Quiver {
    let ids: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let triples: Vec<(&str, usize, usize)> = (1..=n).map(|i| (ids[i - 1].as_str(), i, i % n + 1)).collect();
    Quiver::from_triples(n, &triples).expect("valid quiver")
}
