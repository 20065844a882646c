//! Nilpotency of all oriented cycles, tested through spans of arrow words.

use algebra_core::{Matrix, Scalar, VertexId};
use num_traits::Zero;
use rep_core::Representation;

/// A subspace of matrices of one shape, kept as fully reduced row vectors.
struct MatrixSpan {
    rows: Vec<(usize, Vec<Scalar>)>,
    members: Vec<Matrix>,
}

impl MatrixSpan {
    fn new() -> Self {
        MatrixSpan { rows: Vec::new(), members: Vec::new() }
    }

    /// Adds m when it is independent of the current span; returns whether it was added.
    fn insert(&mut self, m: &Matrix) -> bool {
        let mut v: Vec<Scalar> = (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect();
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &factor * r;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else { return false };
        let lead = v[pivot].clone();
        for x in v.iter_mut() {
            *x /= &lead;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x -= &factor * r;
                }
            }
        }
        self.rows.push((pivot, v));
        self.members.push(m.clone());
        true
    }
}

/// Basis of the span of all products of one or more generators.
fn word_span(generators: &[Matrix]) -> Vec<Matrix> {
    let mut span = MatrixSpan::new();
    let mut frontier: Vec<Matrix> = generators.iter().filter(|g| span.insert(g)).cloned().collect();
    while let Some(w) = frontier.pop() {
        for g in generators {
            let next = g * &w;
            if span.insert(&next) {
                frontier.push(next);
            }
        }
    }
    span.members
}

fn offsets(x: &Representation) -> Vec<usize> {
    let mut out = vec![0];
    for &d in x.dims() {
        out.push(out.last().unwrap() + d);
    }
    out
}

/// Arrow matrices as block operators on ⊕ M_i.
fn block_operators(x: &Representation) -> Vec<Matrix> {
    let off = offsets(x);
    let total = x.total_dim();
    x.quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mut m = Matrix::zeros(total, total);
            m.set_block(off[a.head - 1], off[a.tail - 1], x.matrix(k));
            m
        })
        .collect()
}

/// True iff the trace of every arrow word vanishes, i.e. every oriented cycle acts nilpotently.
pub fn null_cone_membership(x: &Representation) -> bool {
    word_span(&block_operators(x)).iter().all(|w| w.trace().is_zero())
}

/// Default exponent max_i α_i for [`product_of_cycles_vanishes`].
pub fn default_cycle_bound(x: &Representation) -> usize {
    x.dims().iter().copied().max().unwrap_or(0)
}

/// True iff at every vertex i, all products of `bound` closed words at i vanish.
pub fn product_of_cycles_vanishes(x: &Representation, bound: usize) -> bool {
    let words = word_span(&block_operators(x));
    let off = offsets(x);
    x.quiver().vertices().all(|v: VertexId| {
        let d = x.dim(v);
        if d == 0 {
            return true;
        }
        let mut closed = MatrixSpan::new();
        for w in &words {
            closed.insert(&w.block(off[v - 1], off[v - 1], d, d));
        }
        let cycles = closed.members;
        if bound == 0 {
            return false;
        }
        let mut products = cycles.clone();
        for _ in 1..bound {
            let mut next = MatrixSpan::new();
            for c in &cycles {
                for p in &products {
                    next.insert(&(c * p));
                }
            }
            products = next.members;
            if products.is_empty() {
                break;
            }
        }
        products.is_empty()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::catalog;

    fn loop_rep(entries: &[i64], d: usize) -> Representation {
        Representation::new(catalog::jordan_quiver(), vec![d], vec![Matrix::from_ints(d, d, entries)]).unwrap()
    }

    #[test]
    fn nilpotent_loop_is_in_null_cone() {
        let x = loop_rep(&[0, 1, 0, 0], 2);
        assert!(null_cone_membership(&x));
        assert!(product_of_cycles_vanishes(&x, 2));
        assert!(!product_of_cycles_vanishes(&x, 1));
    }

    #[test]
    fn nonzero_eigenvalue_is_not() {
        let x = loop_rep(&[1, 0, 0, 0], 2);
        assert!(!null_cone_membership(&x));
        assert!(!product_of_cycles_vanishes(&x, 2));
    }

    #[test]
    fn two_cycle_with_nilpotent_product() {
        let q = catalog::cyclic_quiver(2);
        let a1 = Matrix::from_ints(2, 2, &[0, 1, 0, 0]);
        let a2 = Matrix::identity(2);
        let x = Representation::new(q, vec![2, 2], vec![a1, a2]).unwrap();
        assert!(null_cone_membership(&x));
        assert!(product_of_cycles_vanishes(&x, 2));
    }

    #[test]
    fn zero_representation_vanishes() {
        let x = Representation::zero(catalog::cyclic_quiver(3), vec![1, 2, 0]).unwrap();
        assert!(null_cone_membership(&x));
        assert!(product_of_cycles_vanishes(&x, default_cycle_bound(&x)));
    }
}
