use algebra_core::{preimage, span_contains, span_intersection, span_sum, Matrix, VertexId};

use crate::error::RepError;
use crate::representation::{DimensionVector, Representation};

/// Per-vertex subspaces, each stored as its canonical column-echelon basis,
/// so two subspaces are equal exactly when their matrices are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    ambient: DimensionVector,
    basis: Vec<Matrix>,
}

impl GradedSubspace {
    /// Spans of the given columns; the columns need not be independent.
    pub fn new(ambient: DimensionVector, spanning: Vec<Matrix>) -> Result<Self, RepError> {
        if spanning.len() != ambient.len() {
            return Err(RepError::DimensionCount { expected: ambient.len(), found: spanning.len() });
        }
        for (i, (m, &d)) in spanning.iter().zip(&ambient).enumerate() {
            if m.rows() != d {
                return Err(RepError::SubspaceShape { vertex: i + 1, expected: d, found: m.rows() });
            }
        }
        let basis = spanning.iter().map(Matrix::column_echelon).collect();
        Ok(GradedSubspace { ambient, basis })
    }

    pub fn zero(ambient: DimensionVector) -> Self {
        let basis = ambient.iter().map(|&d| Matrix::zeros(d, 0)).collect();
        GradedSubspace { ambient, basis }
    }

    pub fn full(ambient: DimensionVector) -> Self {
        let basis = ambient.iter().map(|&d| Matrix::identity(d)).collect();
        GradedSubspace { ambient, basis }
    }

    /// Graded kernel of per-vertex maps out of a space of the given dimensions.
    pub fn kernel_of(blocks: &[Matrix]) -> Self {
        let ambient = blocks.iter().map(Matrix::cols).collect();
        let basis = blocks.iter().map(|b| b.kernel().column_echelon()).collect();
        GradedSubspace { ambient, basis }
    }

    /// Graded image of per-vertex maps.
    pub fn image_of(blocks: &[Matrix]) -> Self {
        let ambient = blocks.iter().map(Matrix::rows).collect();
        let basis = blocks.iter().map(Matrix::column_echelon).collect();
        GradedSubspace { ambient, basis }
    }

    pub fn ambient(&self) -> &DimensionVector {
        &self.ambient
    }

    pub fn at(&self, v: VertexId) -> &Matrix {
        &self.basis[v - 1]
    }

    pub fn bases(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn dims(&self) -> DimensionVector {
        self.basis.iter().map(Matrix::cols).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.iter().all(|b| b.cols() == 0)
    }

    pub fn contains(&self, other: &GradedSubspace) -> bool {
        self.basis.iter().zip(&other.basis).all(|(a, b)| span_contains(a, b))
    }

    pub fn intersect(&self, other: &GradedSubspace) -> GradedSubspace {
        let basis = self.basis.iter().zip(&other.basis).map(|(a, b)| span_intersection(a, b)).collect();
        GradedSubspace { ambient: self.ambient.clone(), basis }
    }

    pub fn sum(&self, other: &GradedSubspace) -> GradedSubspace {
        let basis = self.basis.iter().zip(&other.basis).map(|(a, b)| span_sum(a, b)).collect();
        GradedSubspace { ambient: self.ambient.clone(), basis }
    }
}

/// X_a·U_tail ⊆ U_head for every arrow a.
pub fn is_subrepresentation(u: &GradedSubspace, x: &Representation) -> bool {
    x.quiver().arrows().iter().enumerate().all(|(k, a)| {
        let image = x.matrix(k) * u.at(a.tail);
        span_contains(u.at(a.head), &image)
    })
}

/// (soc M)_i = ⋂ ker X_a over arrows a leaving i.
pub fn socle(x: &Representation) -> GradedSubspace {
    let q = x.quiver();
    let basis = q
        .vertices()
        .map(|v| {
            let outgoing: Vec<&Matrix> = q.outgoing(v).into_iter().map(|k| x.matrix(k)).collect();
            Matrix::vstack(&outgoing, x.dim(v)).kernel().column_echelon()
        })
        .collect();
    GradedSubspace { ambient: x.dims().clone(), basis }
}

/// The largest subrepresentation of x contained in k.
pub fn maximal_submodule_in(x: &Representation, k: &GradedSubspace) -> GradedSubspace {
    let q = x.quiver();
    let mut current = k.clone();
    loop {
        let basis: Vec<Matrix> = q
            .vertices()
            .map(|v| {
                q.outgoing(v).into_iter().fold(current.at(v).clone(), |acc, a| {
                    let head = q.arrow(a).head;
                    span_intersection(&acc, &preimage(x.matrix(a), current.at(head)))
                })
            })
            .collect();
        let next = GradedSubspace { ambient: current.ambient.clone(), basis };
        if next == current {
            return current;
        }
        current = next;
    }
}
