//! The quiver Q♠, the dimension vector α̃ and the module W♠ whose α̃-submodules parametrize the
//! fiber over fixed characteristic polynomials of the cycles.
//!
//! A basis vector of W_v is labelled by a path ρ of Q̂ leaving the component of v, one Jordan-string
//! position per visited cycle, and a framing coordinate at a vertex of the last component. The
//! string positions stand for t^s/s!·e^{λt} in one variable per visit, so a cycle arrow acts as
//! λ + shift on the variable of its own visit and a base arrow evaluates that variable at 0.

use std::collections::HashMap;

use algebra_core::{int, Arrow, Matrix, Quiver, Scalar, VertexId};
use cyclic_fibers::spectral_projector;
use framed::{FramedRep, FramingVector};
use itertools::Itertools;
use rep_core::{is_subrepresentation, DimensionVector, GradedSubspace, ModuleMap, Representation};

use crate::decomposition::SuccessiveDecomposition;
use crate::error::SuccessiveError;
use crate::roots::{cycle_char_polys, cycle_operator, MultiRootData};

/// Basis label of W_v.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpadeLabel {
    /// Base arrows of ρ in travel order.
    pub path: Vec<usize>,
    /// Per visited component: (root index, string position) on a cycle, None otherwise.
    pub factors: Vec<Option<(usize, usize)>>,
    /// Vertex of the last visited component carrying the framing coordinate.
    pub target: VertexId,
    /// 1-based framing coordinate.
    pub copy: usize,
}

/// Vertex i^(l) of Q♠: a vertex of Q together with a root of its cycle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpadeVertex {
    pub vertex: VertexId,
    pub root: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpadeBundle {
    pub decomposition: SuccessiveDecomposition,
    pub roots: MultiRootData,
    pub zeta: FramingVector,
    pub spade_quiver: Quiver,
    /// Spade vertex k + 1 is `vertices[k]`.
    pub vertices: Vec<SpadeVertex>,
    pub names: Vec<String>,
    /// Spade arrow k lifts arrow `lifts[k]` of Q.
    pub lifts: Vec<usize>,
    pub alpha_tilde: DimensionVector,
    pub w_spade: Representation,
    pub labels: Vec<Vec<SpadeLabel>>,
}

fn root_choices(decomp: &SuccessiveDecomposition, mrd: &MultiRootData, v: VertexId) -> Vec<Option<usize>> {
    let c = decomp.component_of[v - 1];
    if decomp.components[c].is_cycle() {
        (0..mrd.components[c].roots.len()).map(Some).collect()
    } else {
        vec![None]
    }
}

/// String positions available on a visit to component c, optionally restricted to one root.
fn factor_choices(mrd: &MultiRootData, decomp: &SuccessiveDecomposition, c: usize, root: Option<usize>) -> Vec<Option<(usize, usize)>> {
    if !decomp.components[c].is_cycle() {
        return vec![None];
    }
    (0..mrd.components[c].roots.len())
        .filter(|&l| root.is_none_or(|r| r == l))
        .flat_map(|l| (0..mrd.order(c, l)).map(move |s| Some((l, s))))
        .collect()
}

fn labels_at(decomp: &SuccessiveDecomposition, mrd: &MultiRootData, zeta: &[usize], sv: &SpadeVertex) -> Vec<SpadeLabel> {
    let start = decomp.component_of[sv.vertex - 1];
    let mut labels = Vec::new();
    for path in decomp.base_paths(start) {
        let mut visits = vec![start];
        visits.extend(path.iter().map(|&k| decomp.component_of[decomp.quiver.arrow(k).head - 1]));
        let choices: Vec<Vec<Option<(usize, usize)>>> = visits
            .iter()
            .enumerate()
            .map(|(t, &c)| factor_choices(mrd, decomp, c, if t == 0 { sv.root } else { None }))
            .collect();
        let last = &decomp.components[*visits.last().expect("at least one visit")];
        for factors in choices.into_iter().multi_cartesian_product() {
            for &target in &last.vertices {
                for copy in 1..=zeta[target - 1] {
                    labels.push(SpadeLabel { path: path.clone(), factors: factors.clone(), target, copy });
                }
            }
        }
    }
    labels
}

/// Leaving vertex of the first visit: the tail of the first base arrow, or the framing vertex.
fn leaving_vertex(decomp: &SuccessiveDecomposition, label: &SpadeLabel) -> VertexId {
    label.path.first().map_or(label.target, |&k| decomp.quiver.arrow(k).tail)
}

fn suffix(roots: &[Option<usize>]) -> String {
    let parts: Vec<String> = roots.iter().flatten().map(|l| (l + 1).to_string()).collect();
    if parts.is_empty() {
        String::new()
    } else {
        format!("_{}", parts.join(","))
    }
}

pub fn build_spade(
    decomp: &SuccessiveDecomposition,
    mrd: &MultiRootData,
    zeta: &[usize],
) -> Result<SpadeBundle, SuccessiveError> {
    let q = &decomp.quiver;
    if zeta.len() != q.vertex_count() {
        return Err(SuccessiveError::VertexCount { expected: q.vertex_count(), found: zeta.len() });
    }
    mrd.validate(decomp)?;

    let vertices: Vec<SpadeVertex> = q
        .vertices()
        .flat_map(|v| root_choices(decomp, mrd, v).into_iter().map(move |root| SpadeVertex { vertex: v, root }))
        .collect();
    let index: HashMap<SpadeVertex, usize> = vertices.iter().cloned().enumerate().map(|(k, sv)| (sv, k)).collect();
    let names = vertices.iter().map(|sv| format!("{}{}", sv.vertex, suffix(&[sv.root]))).collect();
    let alpha_tilde = vertices
        .iter()
        .map(|sv| match sv.root {
            Some(l) => mrd.multiplicity(decomp, sv.vertex, l),
            None => mrd.components[decomp.component_of[sv.vertex - 1]].roots[0].1[0],
        })
        .collect();
    let labels: Vec<Vec<SpadeLabel>> = vertices.iter().map(|sv| labels_at(decomp, mrd, zeta, sv)).collect();
    let positions: Vec<HashMap<&SpadeLabel, usize>> =
        labels.iter().map(|ls| ls.iter().enumerate().map(|(k, l)| (l, k)).collect()).collect();

    let mut arrows = Vec::new();
    let mut matrices = Vec::new();
    let mut lifts = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        if decomp.is_cycle_arrow(k) {
            let c = decomp.component_of[a.tail - 1];
            for (l, (lambda, _)) in mrd.components[c].roots.iter().enumerate() {
                let from = index[&SpadeVertex { vertex: a.tail, root: Some(l) }];
                let to = index[&SpadeVertex { vertex: a.head, root: Some(l) }];
                let mut m = Matrix::zeros(labels[to].len(), labels[from].len());
                for (j, label) in labels[from].iter().enumerate() {
                    let i = positions[to][label];
                    if leaving_vertex(decomp, label) == a.tail {
                        m.set(i, j, lambda.clone());
                        let Some((root, s)) = label.factors[0] else { unreachable!("cycle visits carry a root") };
                        if s > 0 {
                            let mut lower = label.clone();
                            lower.factors[0] = Some((root, s - 1));
                            m.set(positions[to][&lower], j, int(1));
                        }
                    } else {
                        m.set(i, j, int(1));
                    }
                }
                arrows.push(Arrow { id: format!("{}{}", a.id, suffix(&[Some(l)])), tail: from + 1, head: to + 1 });
                matrices.push(m);
                lifts.push(k);
            }
        } else {
            for l1 in root_choices(decomp, mrd, a.tail) {
                for l2 in root_choices(decomp, mrd, a.head) {
                    let from = index[&SpadeVertex { vertex: a.tail, root: l1 }];
                    let to = index[&SpadeVertex { vertex: a.head, root: l2 }];
                    let mut m = Matrix::zeros(labels[to].len(), labels[from].len());
                    for (i, label) in labels[to].iter().enumerate() {
                        let mut source = label.clone();
                        source.path.insert(0, k);
                        source.factors.insert(0, l1.map(|l| (l, 0)));
                        m.set(i, positions[from][&source], int(1));
                    }
                    arrows.push(Arrow { id: format!("{}{}", a.id, suffix(&[l1, l2])), tail: from + 1, head: to + 1 });
                    matrices.push(m);
                    lifts.push(k);
                }
            }
        }
    }
    let spade_quiver = Quiver::new(vertices.len(), arrows).expect("spade arrow ids are distinct");
    let dims = labels.iter().map(Vec::len).collect();
    let w_spade = Representation::new(spade_quiver.clone(), dims, matrices)?;
    Ok(SpadeBundle {
        decomposition: decomp.clone(),
        roots: mrd.clone(),
        zeta: zeta.to_vec(),
        spade_quiver,
        vertices,
        names,
        lifts,
        alpha_tilde,
        w_spade,
        labels,
    })
}

/// (Q♠, α̃, W♠): the fiber is the Grassmannian of α̃-dimensional submodules of W♠.
pub fn fiber_spec(
    decomp: &SuccessiveDecomposition,
    mrd: &MultiRootData,
    zeta: &[usize],
) -> Result<(Quiver, DimensionVector, Representation), SuccessiveError> {
    let bundle = build_spade(decomp, mrd, zeta)?;
    Ok((bundle.spade_quiver, bundle.alpha_tilde, bundle.w_spade))
}

impl SpadeBundle {
    /// Spade vertices over v, with their offsets inside W_v = ⊕_l W♠_{v^(l)}.
    pub fn blocks_of(&self, v: VertexId) -> Vec<(usize, usize)> {
        let mut offset = 0;
        let mut out = Vec::new();
        for (k, sv) in self.vertices.iter().enumerate() {
            if sv.vertex == v {
                out.push((k, offset));
                offset += self.labels[k].len();
            }
        }
        out
    }

    /// W as a representation of Q.
    pub fn flatten(&self) -> Representation {
        let q = &self.decomposition.quiver;
        let dims: Vec<usize> = q.vertices().map(|v| self.blocks_of(v).iter().map(|&(k, _)| self.labels[k].len()).sum()).collect();
        let mut matrices: Vec<Matrix> = q.arrows().iter().map(|a| Matrix::zeros(dims[a.head - 1], dims[a.tail - 1])).collect();
        for (k, a) in self.spade_quiver.arrows().iter().enumerate() {
            let base = self.lifts[k];
            let row = self.offset_of(a.head - 1);
            let col = self.offset_of(a.tail - 1);
            matrices[base].set_block(row, col, self.w_spade.matrix(k));
        }
        Representation::new(q.clone(), dims, matrices).expect("blocks fill the flattened shapes")
    }

    fn offset_of(&self, spade: usize) -> usize {
        let v = self.vertices[spade].vertex;
        self.blocks_of(v).into_iter().find(|&(k, _)| k == spade).map(|(_, o)| o).expect("spade vertex lies over v")
    }

    /// Rows of W_v belonging to spade vertex k.
    fn rows_of(&self, spade: usize) -> std::ops::Range<usize> {
        let o = self.offset_of(spade);
        o..o + self.labels[spade].len()
    }

    /// The finite shadow of Φ: row (ρ, factors, p, copy) of the block at v is row `copy` of
    /// f_p·B·Π_L·a_L·…·a_1·B_0·Π_0 with Π_t = (τ − λ_l)^s·π_l at the entry vertex of visit t and B the
    /// shortest cycle segments.
    pub fn embed(&self, fr: &FramedRep) -> Result<ModuleMap, SuccessiveError> {
        let decomp = &self.decomposition;
        let x = fr.rep();
        let n = decomp.quiver.vertex_count();
        if x.quiver() != &decomp.quiver || fr.zeta() != &self.zeta {
            return Err(SuccessiveError::VertexCount { expected: n, found: x.quiver().vertex_count() });
        }
        if cycle_char_polys(x, decomp) != self.roots.char_polys(decomp) {
            return Err(SuccessiveError::CharPolyMismatch);
        }
        let mut operators: HashMap<(VertexId, usize, usize), Matrix> = HashMap::new();
        let mut operator = |u: VertexId, factor: Option<(usize, usize)>| -> Matrix {
            let Some((l, s)) = factor else { return Matrix::identity(x.dim(u)) };
            operators
                .entry((u, l, s))
                .or_insert_with(|| {
                    let lambda = &self.roots.components[decomp.component_of[u - 1]].roots[l].0;
                    let tau = cycle_operator(x, decomp, u);
                    let shifted = &tau - &Matrix::identity(x.dim(u)).scale(lambda);
                    &shifted.pow(s) * &spectral_projector(&tau, lambda)
                })
                .clone()
        };
        let segment = |from: VertexId, to: VertexId| -> Matrix {
            decomp.segment(from, to).iter().fold(Matrix::identity(x.dim(from)), |acc, &k| x.matrix(k) * &acc)
        };
        let mut blocks = Vec::with_capacity(n);
        for v in 1..=n {
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for (k, _) in self.blocks_of(v) {
                for label in &self.labels[k] {
                    let mut at = v;
                    let mut acc = operator(v, label.factors[0]);
                    for (t, &arrow) in label.path.iter().enumerate() {
                        let a = decomp.quiver.arrow(arrow);
                        acc = &(x.matrix(arrow) * &segment(at, a.tail)) * &acc;
                        at = a.head;
                        acc = &operator(at, label.factors[t + 1]) * &acc;
                    }
                    let row = &(fr.framing_at(label.target) * &segment(at, label.target)) * &acc;
                    rows.push(row.row(label.copy - 1).to_vec());
                }
            }
            blocks.push(Matrix::from_rows(rows, x.dim(v)).expect("rows share the width α_v"));
        }
        Ok(ModuleMap { blocks })
    }

    /// The α̃-dimensional point of W♠ cut out by an embedding into W.
    pub fn spade_point(&self, blocks: &[Matrix]) -> GradedSubspace {
        let spanning = (0..self.vertices.len())
            .map(|k| {
                let block = &blocks[self.vertices[k].vertex - 1];
                let rows: Vec<usize> = self.rows_of(k).collect();
                block.select_rows(&rows).column_echelon()
            })
            .collect();
        GradedSubspace::new(self.w_spade.dims().clone(), spanning).expect("blocks match the spade dimensions")
    }

    /// Framed representation on a submodule point of W♠ with dimension vector α̃, together with the
    /// bases of U_v = ⊕_l Ũ_{v^(l)} inside W_v.
    pub fn recover(&self, point: &GradedSubspace) -> Result<(FramedRep, Vec<Matrix>), SuccessiveError> {
        if point.ambient() != self.w_spade.dims() {
            let k = (0..self.vertices.len()).find(|&k| point.ambient().get(k) != Some(&self.labels[k].len())).unwrap_or(0);
            return Err(SuccessiveError::BlockShape {
                vertex: k + 1,
                expected: self.labels.get(k).map_or(0, Vec::len),
                found: point.ambient().get(k).copied().unwrap_or(0),
            });
        }
        if point.dims() != self.alpha_tilde {
            return Err(SuccessiveError::DimensionMismatch { expected: self.alpha_tilde.clone(), found: point.dims() });
        }
        if !is_subrepresentation(point, &self.w_spade) {
            return Err(SuccessiveError::NotSubmodule);
        }
        let decomp = &self.decomposition;
        let w = self.flatten();
        let bases: Vec<Matrix> = decomp
            .quiver
            .vertices()
            .map(|v| {
                let blocks = self.blocks_of(v);
                let cols: usize = blocks.iter().map(|&(k, _)| point.at(k + 1).cols()).sum();
                let mut basis = Matrix::zeros(w.dim(v), cols);
                let mut col = 0;
                for (k, offset) in blocks {
                    basis.set_block(offset, col, point.at(k + 1));
                    col += point.at(k + 1).cols();
                }
                basis
            })
            .collect();
        let matrices = decomp
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                bases[a.head - 1].solve(&(w.matrix(k) * &bases[a.tail - 1])).ok_or(SuccessiveError::NotSubmodule)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let dims = bases.iter().map(Matrix::cols).collect();
        let rep = Representation::new(decomp.quiver.clone(), dims, matrices)?;
        let framing = decomp
            .quiver
            .vertices()
            .map(|p| {
                let mut f = Matrix::zeros(self.zeta[p - 1], bases[p - 1].cols());
                for (k, offset) in self.blocks_of(p) {
                    for (i, label) in self.labels[k].iter().enumerate() {
                        let first_string = label.factors[0].is_none_or(|(_, s)| s == 0);
                        if label.path.is_empty() && label.target == p && first_string {
                            for c in 0..f.cols() {
                                let sum = f.get(label.copy - 1, c) + bases[p - 1].get(offset + i, c);
                                f.set(label.copy - 1, c, sum);
                            }
                        }
                    }
                }
                f
            })
            .collect();
        let fr = FramedRep::new(rep, self.zeta.clone(), framing)?;
        Ok((fr, bases))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::detect_successive;
    use cyclic_fibers::RootData;

    fn loop_with_roots(roots: Vec<(Scalar, Vec<usize>)>, zeta: usize) -> SpadeBundle {
        let q = Quiver::from_triples(1, &[("a", 1, 1)]).unwrap();
        let d = detect_successive(&q).unwrap();
        build_spade(&d, &MultiRootData::new(vec![RootData::new(roots)]), &[zeta]).unwrap()
    }

    #[test]
    fn a_loop_splits_into_one_vertex_per_root() {
        let b = loop_with_roots(vec![(int(1), vec![1]), (int(2), vec![2])], 1);
        assert_eq!(b.names, vec!["1_1", "1_2"]);
        assert_eq!(b.alpha_tilde, vec![1, 2]);
        assert_eq!(b.w_spade.dims(), &vec![1, 2]);
        assert_eq!(b.w_spade.matrix(1), &Matrix::from_ints(2, 2, &[2, 1, 0, 2]));
    }

    #[test]
    fn flattening_reassembles_the_blocks() {
        let b = loop_with_roots(vec![(int(0), vec![2]), (int(3), vec![1])], 1);
        let w = b.flatten();
        assert_eq!(w.matrix(0), &Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 3]));
    }
}
