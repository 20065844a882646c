use std::collections::BTreeMap;

use algebra_core::{LinComb, Matrix, Path, Quiver, RelationSet, VertexId};

use crate::error::RepError;

/// Per-vertex dimensions, indexed by `vertex - 1`.
pub type DimensionVector = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    dims: DimensionVector,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// `matrices[k]` is the matrix of arrow `k`, of shape dims[head] × dims[tail].
    pub fn new(quiver: Quiver, dims: DimensionVector, matrices: Vec<Matrix>) -> Result<Self, RepError> {
        if dims.len() != quiver.vertex_count() {
            return Err(RepError::DimensionCount { expected: quiver.vertex_count(), found: dims.len() });
        }
        if matrices.len() != quiver.arrows().len() {
            let missing = quiver.arrows().get(matrices.len()).map(|a| a.id.clone()).unwrap_or_default();
            return Err(RepError::MissingArrow(missing));
        }
        for (a, m) in quiver.arrows().iter().zip(&matrices) {
            let expected = (dims[a.head - 1], dims[a.tail - 1]);
            if m.shape() != expected {
                return Err(RepError::ShapeMismatch { arrow: a.id.clone(), expected, found: m.shape() });
            }
        }
        Ok(Representation { quiver, dims, matrices })
    }

    pub fn from_named(quiver: Quiver, dims: DimensionVector, named: BTreeMap<String, Matrix>) -> Result<Self, RepError> {
        for id in named.keys() {
            if quiver.arrow_index(id).is_none() {
                return Err(RepError::UnknownArrow(id.clone()));
            }
        }
        let mut matrices = Vec::new();
        for a in quiver.arrows() {
            matrices.push(named.get(&a.id).cloned().ok_or_else(|| RepError::MissingArrow(a.id.clone()))?);
        }
        Representation::new(quiver, dims, matrices)
    }

    pub fn zero(quiver: Quiver, dims: DimensionVector) -> Result<Self, RepError> {
        if dims.len() != quiver.vertex_count() {
            return Err(RepError::DimensionCount { expected: quiver.vertex_count(), found: dims.len() });
        }
        let matrices = quiver.arrows().iter().map(|a| Matrix::zeros(dims[a.head - 1], dims[a.tail - 1])).collect();
        Ok(Representation { quiver, dims, matrices })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn dim(&self, v: VertexId) -> usize {
        self.dims[v - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, k: usize) -> &Matrix {
        &self.matrices[k]
    }

    pub fn matrix_by_id(&self, id: &str) -> Option<&Matrix> {
        self.quiver.arrow_index(id).map(|k| &self.matrices[k])
    }

    /// X_p for a path p: the product of its arrow matrices, last-applied leftmost.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dim(p.source));
        for &k in p.arrows.iter().rev() {
            m = &self.matrices[k] * &m;
        }
        m
    }

    /// The action of a combination of paths, one matrix per (source, target) component.
    pub fn path_action(&self, c: &LinComb) -> BTreeMap<(VertexId, VertexId), Matrix> {
        let mut out: BTreeMap<(VertexId, VertexId), Matrix> = BTreeMap::new();
        for (p, x) in c.terms() {
            let term = self.path_matrix(p).scale(x);
            let slot = out
                .entry((p.source, p.target))
                .or_insert_with(|| Matrix::zeros(self.dim(p.target), self.dim(p.source)));
            *slot = &*slot + &term;
        }
        out
    }

    /// True iff X_p = 0 for every relation p.
    pub fn check_relations(&self, rho: &RelationSet) -> Result<bool, RepError> {
        for r in rho.relations() {
            for (p, _) in r.terms() {
                let foreign = p.arrows.iter().any(|&k| k >= self.quiver.arrows().len())
                    || p.source == 0
                    || p.source > self.quiver.vertex_count()
                    || p.target > self.quiver.vertex_count();
                if foreign {
                    return Err(RepError::ForeignRelation);
                }
            }
            if self.path_action(r).values().any(|m| !m.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The representation g·X with X_a ↦ g_head X_a g_tail⁻¹.
    pub fn change_basis(&self, g: &[Matrix]) -> Option<Representation> {
        let inverses: Vec<Matrix> = g.iter().map(Matrix::inverse).collect::<Option<_>>()?;
        let matrices = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.matrices)
            .map(|(a, m)| &(&g[a.head - 1] * m) * &inverses[a.tail - 1])
            .collect();
        Some(Representation { quiver: self.quiver.clone(), dims: self.dims.clone(), matrices })
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.quiver, other.quiver, "direct sum over different quivers");
        let dims: DimensionVector = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(x.rows() + y.rows(), x.cols() + y.cols());
                m.set_block(0, 0, x);
                m.set_block(x.rows(), x.cols(), y);
                m
            })
            .collect();
        Representation { quiver: self.quiver.clone(), dims, matrices }
    }

    /// The restriction to a subrepresentation given by basis columns per vertex.
    pub fn restrict(&self, bases: &[Matrix]) -> Option<Representation> {
        let dims: DimensionVector = bases.iter().map(Matrix::cols).collect();
        let mut matrices = Vec::new();
        for (a, m) in self.quiver.arrows().iter().zip(&self.matrices) {
            let image = m * &bases[a.tail - 1];
            matrices.push(bases[a.head - 1].solve(&image)?);
        }
        Some(Representation { quiver: self.quiver.clone(), dims, matrices })
    }
}

/// A family of per-vertex linear maps f_v: M_v → N_v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub blocks: Vec<Matrix>,
}

impl ModuleMap {
    pub fn block(&self, v: VertexId) -> &Matrix {
        &self.blocks[v - 1]
    }

    /// f_head · X_a = Y_a · f_tail for every arrow.
    pub fn is_intertwiner(&self, source: &Representation, target: &Representation) -> bool {
        source.quiver().arrows().iter().enumerate().all(|(k, a)| {
            &self.blocks[a.head - 1] * source.matrix(k) == target.matrix(k) * &self.blocks[a.tail - 1]
        })
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&first.blocks).map(|(a, b)| a * b).collect() }
    }
}

/// A basis of Hom(x, y) obtained by solving the intertwining equations.
pub fn hom_space(x: &Representation, y: &Representation) -> Vec<ModuleMap> {
    let q = x.quiver();
    let n = q.vertex_count();
    // Unknown f_v has y.dim(v) × x.dim(v) entries, stored row-major after the earlier vertices.
    let mut offset = vec![0; n + 1];
    for v in 1..=n {
        offset[v] = offset[v - 1] + y.dim(v) * x.dim(v);
    }
    let unknowns = offset[n];
    let var = |v: VertexId, i: usize, j: usize| offset[v - 1] + i * x.dim(v) + j;
    let mut rows: Vec<Vec<algebra_core::Scalar>> = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (t, h) = (a.tail, a.head);
        let (xa, ya) = (x.matrix(k), y.matrix(k));
        // (f_h X_a − Y_a f_t)[i][j] = 0 for i < dim y_h, j < dim x_t.
        for i in 0..y.dim(h) {
            for j in 0..x.dim(t) {
                let mut row = vec![algebra_core::int(0); unknowns];
                for l in 0..x.dim(h) {
                    row[var(h, i, l)] += xa.get(l, j);
                }
                for l in 0..y.dim(t) {
                    row[var(t, l, j)] -= ya.get(i, l);
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows, unknowns).expect("rows have uniform width");
    let kernel = system.kernel();
    (0..kernel.cols())
        .map(|c| ModuleMap {
            blocks: (1..=n)
                .map(|v| Matrix::from_fn(y.dim(v), x.dim(v), |i, j| kernel.get(var(v, i, j), c).clone()))
                .collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::catalog;

    #[test]
    fn path_action_composes() {
        let (q, rho) = catalog::nakayama_chain();
        let x1 = Matrix::from_ints(2, 1, &[1, 2]);
        let x2 = Matrix::from_ints(1, 2, &[2, -1]);
        let rep = Representation::new(q.clone(), vec![1, 2, 1], vec![x1.clone(), x2.clone()]).unwrap();
        let p = q.path_from_ids(&["a2", "a1"]).unwrap();
        assert_eq!(rep.path_matrix(&p), &x2 * &x1);
        assert!(rep.check_relations(&rho).unwrap());
        let e2 = LinComb::from_path(Path::trivial(2));
        assert_eq!(rep.path_action(&e2)[&(2, 2)], Matrix::identity(2));
    }

    #[test]
    fn shape_errors() {
        let (q, _) = catalog::nakayama_chain();
        let bad = Representation::new(q, vec![1, 1, 1], vec![Matrix::zeros(2, 1), Matrix::zeros(1, 1)]);
        assert!(matches!(bad, Err(RepError::ShapeMismatch { .. })));
    }

    #[test]
    fn jordan_block_relations() {
        let (q, rho3) = catalog::truncated_loop(3);
        let (_, rho2) = catalog::truncated_loop(2);
        let j = Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
        let rep = Representation::new(q, vec![3], vec![j]).unwrap();
        assert!(rep.check_relations(&rho3).unwrap());
        assert!(!rep.check_relations(&rho2).unwrap());
    }

    #[test]
    fn hom_spaces() {
        let q = catalog::jordan_quiver();
        let jordan = Representation::new(q.clone(), vec![2], vec![Matrix::from_ints(2, 2, &[3, 1, 0, 3])]).unwrap();
        let homs = hom_space(&jordan, &jordan);
        assert_eq!(homs.len(), 2);
        assert!(homs.iter().all(|h| h.is_intertwiner(&jordan, &jordan)));
        let (chain, _) = catalog::nakayama_chain();
        let s1 = Representation::zero(chain.clone(), vec![1, 0, 0]).unwrap();
        let s2 = Representation::zero(chain, vec![0, 1, 0]).unwrap();
        assert!(hom_space(&s1, &s2).is_empty());
    }
}
