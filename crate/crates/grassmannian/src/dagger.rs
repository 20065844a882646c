//! Index-change sections †_a of the arrow actions on J and the inclusion system they give.

use algebra_core::{span_contains, span_intersection, Matrix, VertexId};
use num_traits::Zero;
use rep_core::GradedSubspace;

use crate::injective::{label_span, InjectiveModule};

/// For an arrow a: i → s, the labels σ of J_s with σa ≠ 0 and the section †_a: J̃_s → J_i.
#[derive(Clone, Debug)]
pub struct ArrowDagger {
    pub arrow: usize,
    pub tail: VertexId,
    pub head: VertexId,
    /// Positions in J_s of the labels spanning J̃_s.
    pub tilde_labels: Vec<usize>,
    /// J_i × |J̃_s| matrix with J_a · † = inclusion of J̃_s.
    pub dagger: Matrix,
    /// Positions in J_i of labels killed by a, when ker a is spanned by labels.
    pub kernel_labels: Option<Vec<usize>>,
    pub kernel: Matrix,
}

#[derive(Clone, Debug)]
pub struct DaggerData {
    pub arrows: Vec<ArrowDagger>,
}

pub fn build_dagger(j: &InjectiveModule) -> DaggerData {
    let q = j.rep.quiver();
    let arrows = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let action = j.rep.matrix(k);
            let tilde_labels: Vec<usize> = (0..action.rows()).filter(|&r| action.row(r).iter().any(|x| !x.is_zero())).collect();
            let restricted = action.select_rows(&tilde_labels);
            // A right inverse of the restricted action supported on pivot columns.
            let (_, pivots) = restricted.rref();
            let square = restricted.select_cols(&pivots);
            let inverse = square.inverse().expect("nonzero rows of an arrow action on J are independent");
            let mut dagger = Matrix::zeros(action.cols(), tilde_labels.len());
            for (row, &col) in pivots.iter().enumerate() {
                for c in 0..tilde_labels.len() {
                    dagger.set(col, c, inverse.get(row, c).clone());
                }
            }
            debug_assert_eq!(action * &dagger, label_span(j, a.head, &tilde_labels));
            let kernel_labels: Vec<usize> = (0..action.cols()).filter(|&c| action.column(c).iter().all(Zero::is_zero)).collect();
            let kernel = action.kernel().column_echelon();
            let kernel_labels = (kernel_labels.len() == kernel.cols()).then_some(kernel_labels);
            ArrowDagger { arrow: k, tail: a.tail, head: a.head, tilde_labels, dagger, kernel_labels, kernel }
        })
        .collect();
    DaggerData { arrows }
}

/// U_i ⊆ ker(a|J_i) ⊕ †_a(U_s ∩ J̃_s) for every arrow a: i → s.
///
/// With ker a in place of the e_i-labelled summand this is exactly a⁻¹(U_s), so the test agrees with submodule membership.
pub fn dagger_condition(u: &GradedSubspace, j: &InjectiveModule, daggers: &DaggerData) -> bool {
    daggers.arrows.iter().all(|d| {
        let tilde = label_span(j, d.head, &d.tilde_labels);
        let meet = span_intersection(u.at(d.head), &tilde);
        let coords = &tilde.transpose() * &meet;
        let allowed = Matrix::hstack(&[&d.kernel, &(&d.dagger * &coords)], j.rep.dim(d.tail));
        span_contains(&allowed, u.at(d.tail))
    })
}

fn sum_of_summands(j: &InjectiveModule, v: VertexId, positions: &[usize]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for &p in positions {
        let name = j.summand_name(&j.labels.at(v)[p].path);
        if !names.contains(&name) {
            names.push(name);
        }
    }
    names
}

/// The inclusion system as readable lines, e.g. "U1 ⊆ V1 ⊕ (U2 ∩ V2)"; sinks give "U{i} ⊆ V{i}".
pub fn dagger_report(j: &InjectiveModule, daggers: &DaggerData) -> Vec<String> {
    let q = j.rep.quiver();
    let mut lines = Vec::new();
    for v in q.vertices() {
        let outgoing: Vec<&ArrowDagger> = daggers.arrows.iter().filter(|d| d.tail == v).collect();
        if outgoing.is_empty() {
            lines.push(format!("U{v} ⊆ V{v}"));
            continue;
        }
        for d in outgoing {
            let mut parts = match &d.kernel_labels {
                Some(pos) => sum_of_summands(j, v, pos),
                None if d.kernel.cols() == 0 => Vec::new(),
                None => vec![format!("ker {}", q.arrow(d.arrow).id)],
            };
            let all = d.tilde_labels.len() == j.rep.dim(d.head);
            if all {
                parts.push(format!("U{}", d.head));
            } else if !d.tilde_labels.is_empty() {
                let inner = sum_of_summands(j, d.head, &d.tilde_labels).join(" ⊕ ");
                parts.push(format!("(U{} ∩ {inner})", d.head));
            }
            let rhs = if parts.is_empty() { "0".to_string() } else { parts.join(" ⊕ ") };
            lines.push(format!("U{v} ⊆ {rhs}"));
        }
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injective::build_injective;
    use algebra_core::{build_quotient_basis, catalog};

    #[test]
    fn nakayama_report() {
        let (q, rho) = catalog::nakayama_chain();
        let b = build_quotient_basis(&q, &rho).unwrap();
        let j = build_injective(&b, &vec![1, 1, 1]);
        let d = build_dagger(&j);
        let mut lines = dagger_report(&j, &d);
        lines.sort();
        assert_eq!(lines, ["U1 ⊆ V1 ⊕ (U2 ∩ V2)", "U2 ⊆ V2 ⊕ U3", "U3 ⊆ V3"]);
        // †_{a1} sends V2^(e2) to V2^(a1); the V3^(a2) label is excluded because a2a1 = 0.
        let a1 = &d.arrows[0];
        assert_eq!(a1.tilde_labels.len(), 1);
        let target = j.labels.position(1, &crate::injective::Label { path: q.arrow_path(0), copy: 1 }).unwrap();
        assert_eq!(a1.dagger, label_span(&j, 1, &[target]));
    }

    #[test]
    fn hereditary_dagger_is_total() {
        let (q, _) = catalog::nakayama_chain();
        let rho = algebra_core::RelationSet::new(vec![], 3).unwrap();
        let b = build_quotient_basis(&q, &rho).unwrap();
        let j = build_injective(&b, &vec![1, 1, 1]);
        for d in build_dagger(&j).arrows {
            assert_eq!(d.tilde_labels.len(), j.rep.dim(d.head));
        }
    }
}
