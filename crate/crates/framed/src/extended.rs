//! The quiver Q̃ with an extra vertex ∞ and ζ_i arrows i → ∞.

use algebra_core::{Arrow, Matrix, Quiver, VertexId};
use rep_core::{DimensionVector, Representation};

use crate::error::FramedError;
use crate::framed_rep::{FramedRep, FramingVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedQuiver {
    pub quiver: Quiver,
    pub infinity: VertexId,
    /// For each framing arrow: (tail vertex, copy index from 1, arrow index in `quiver`).
    pub framing_arrows: Vec<(VertexId, usize, usize)>,
}

impl ExtendedQuiver {
    /// α̃: α with α̃_∞ = 1.
    pub fn extend_dims(&self, alpha: &DimensionVector) -> DimensionVector {
        let mut out = alpha.clone();
        out.push(1);
        out
    }
}

pub fn extend_quiver(q: &Quiver, zeta: &FramingVector) -> ExtendedQuiver {
    let infinity = q.vertex_count() + 1;
    let mut arrows = q.arrows().to_vec();
    let mut framing_arrows = Vec::new();
    for v in q.vertices() {
        for copy in 1..=zeta[v - 1] {
            framing_arrows.push((v, copy, arrows.len()));
            arrows.push(Arrow { id: format!("f{v}_{copy}"), tail: v, head: infinity });
        }
    }
    let quiver = Quiver::new(infinity, arrows).expect("framing arrow ids are fresh");
    ExtendedQuiver { quiver, infinity, framing_arrows }
}

/// The Q̃-representation whose framing arrow (i, p) carries row p of f_i.
pub fn framed_to_extended(fr: &FramedRep) -> (ExtendedQuiver, Representation) {
    let ext = extend_quiver(fr.rep().quiver(), fr.zeta());
    let mut matrices = fr.rep().matrices().to_vec();
    for &(v, copy, _) in &ext.framing_arrows {
        matrices.push(fr.framing_at(v).select_rows(&[copy - 1]));
    }
    let dims = ext.extend_dims(fr.dims());
    let rep = Representation::new(ext.quiver.clone(), dims, matrices).expect("shapes follow from the framed pair");
    (ext, rep)
}

/// Inverse of [`framed_to_extended`] for a quiver produced by [`extend_quiver`].
pub fn extended_to_framed(base: &Quiver, ext: &ExtendedQuiver, x: &Representation) -> Result<FramedRep, FramedError> {
    if x.quiver() != &ext.quiver || x.dim(ext.infinity) != 1 {
        return Err(FramedError::NotExtended);
    }
    let n = base.vertex_count();
    let dims: DimensionVector = x.dims()[..n].to_vec();
    let matrices = x.matrices()[..base.arrows().len()].to_vec();
    let rep = Representation::new(base.clone(), dims.clone(), matrices)?;
    let mut zeta = vec![0; n];
    let mut rows: Vec<Vec<&Matrix>> = vec![Vec::new(); n];
    for &(v, _, k) in &ext.framing_arrows {
        zeta[v - 1] += 1;
        rows[v - 1].push(x.matrix(k));
    }
    let framing = rows.iter().zip(&dims).map(|(r, &d)| Matrix::vstack(r, d)).collect();
    FramedRep::new(rep, zeta, framing)
}
