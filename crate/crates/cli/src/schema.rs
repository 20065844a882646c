//! JSON documents read and written by the command line. Rationals are strings "p/q".

use std::collections::BTreeMap;

use algebra_core::{format_scalar, parse_scalar, Arrow, LinComb, Matrix, Quiver, RelationSet, Scalar};
use cyclic_fibers::{Coordinate, Equation, EquationSet, EquationTag, RootData, StringLabel, VertexAmbient};
use framed::FramedRep;
use rep_core::{GradedSubspace, Representation};
use serde::{Deserialize, Serialize};
use successive_cycles::{MultiRootData, SuccessiveDecomposition};

use crate::error::{input, CliError};

pub type MatrixJson = Vec<Vec<String>>;

pub fn scalar_from_json(text: &str, what: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).ok_or_else(|| input(format!("{what}: {text:?} is not a rational number")))
}

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    m.to_rows().iter().map(|row| row.iter().map(format_scalar).collect()).collect()
}

/// Reads a row list of known shape; a matrix without rows is written `[]`.
pub fn matrix_from_json(rows: &MatrixJson, shape: (usize, usize), what: &str) -> Result<Matrix, CliError> {
    if rows.len() != shape.0 {
        return Err(input(format!("{what}: expected {} rows, found {}", shape.0, rows.len())));
    }
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.1 {
            return Err(input(format!("{what}: row {} has {} entries, expected {}", i + 1, row.len(), shape.1)));
        }
        parsed.push(row.iter().map(|x| scalar_from_json(x, what)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(parsed, shape.1).expect("rows were checked"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    /// Arrow ids in composition order: ["a2", "a1"] is a2a1.
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: usize,
    pub arrows: Vec<ArrowJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<Vec<TermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotency_bound: Option<usize>,
}

impl QuiverJson {
    pub fn from_quiver(q: &Quiver, rho: Option<&RelationSet>) -> Self {
        let arrows = q.arrows().iter().map(|a| ArrowJson { id: a.id.clone(), from: a.tail, to: a.head }).collect();
        let relations = rho
            .map(|r| {
                r.relations()
                    .iter()
                    .map(|rel| {
                        rel.terms()
                            .map(|(p, c)| TermJson {
                                coef: format_scalar(c),
                                path: q.arrow_ids(p).into_iter().map(String::from).collect(),
                            })
                            .collect()
                    })
                    .collect()
            })
            .unwrap_or_default();
        QuiverJson { vertices: q.vertex_count(), arrows, relations, nilpotency_bound: rho.map(RelationSet::nilpotency_bound) }
    }

    pub fn quiver(&self) -> Result<Quiver, CliError> {
        let arrows = self.arrows.iter().map(|a| Arrow { id: a.id.clone(), tail: a.from, head: a.to }).collect();
        Ok(Quiver::new(self.vertices, arrows)?)
    }

    /// The relations; without an explicit bound an acyclic quiver uses its vertex count.
    pub fn relation_set(&self, q: &Quiver) -> Result<RelationSet, CliError> {
        let bound = match self.nilpotency_bound {
            Some(n) => n,
            None if q.is_acyclic() => q.vertex_count().max(2),
            None => return Err(input("a quiver with oriented cycles needs \"nilpotency_bound\"")),
        };
        let mut relations = Vec::with_capacity(self.relations.len());
        for rel in &self.relations {
            let mut terms = Vec::with_capacity(rel.len());
            for t in rel {
                terms.push((q.path_from_ids(&t.path)?, scalar_from_json(&t.coef, "relation coefficient")?));
            }
            relations.push(LinComb::from_terms(terms));
        }
        Ok(RelationSet::new(relations, bound)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramingJson {
    /// Keyed by vertex number; a missing vertex has the zero framing.
    pub framing: BTreeMap<String, MatrixJson>,
    pub zeta: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub dims: Vec<usize>,
    pub matrices: BTreeMap<String, MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framing: Option<BTreeMap<String, MatrixJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<Vec<usize>>,
}

impl RepJson {
    pub fn from_rep(x: &Representation) -> Self {
        let matrices = x.quiver().arrows().iter().zip(x.matrices()).map(|(a, m)| (a.id.clone(), matrix_to_json(m))).collect();
        RepJson { dims: x.dims().clone(), matrices, framing: None, zeta: None }
    }

    pub fn from_framed(fr: &FramedRep) -> Self {
        let mut out = RepJson::from_rep(fr.rep());
        out.framing = Some(fr.framing().iter().enumerate().map(|(i, f)| ((i + 1).to_string(), matrix_to_json(f))).collect());
        out.zeta = Some(fr.zeta().clone());
        out
    }

    pub fn rep(&self, q: &Quiver) -> Result<Representation, CliError> {
        if self.dims.len() != q.vertex_count() {
            return Err(input(format!("\"dims\" has {} entries for {} vertices", self.dims.len(), q.vertex_count())));
        }
        if let Some(id) = self.matrices.keys().find(|id| q.arrow_index(id).is_none()) {
            return Err(input(format!("matrix given for unknown arrow {id:?}")));
        }
        let mut matrices = Vec::with_capacity(q.arrows().len());
        for a in q.arrows() {
            let rows = self.matrices.get(&a.id).ok_or_else(|| input(format!("no matrix for arrow {:?}", a.id)))?;
            let shape = (self.dims[a.head - 1], self.dims[a.tail - 1]);
            matrices.push(matrix_from_json(rows, shape, &format!("matrix of {}", a.id))?);
        }
        Ok(Representation::new(q.clone(), self.dims.clone(), matrices)?)
    }

    /// The framed pair, with framing taken from `separate` when given and from this document otherwise.
    pub fn framed(&self, q: &Quiver, separate: Option<&FramingJson>) -> Result<FramedRep, CliError> {
        let x = self.rep(q)?;
        let (framing, zeta) = match (separate, &self.framing, &self.zeta) {
            (Some(f), _, _) => (&f.framing, &f.zeta),
            (None, Some(f), Some(z)) => (f, z),
            _ => return Err(input("a framed representation needs \"framing\" and \"zeta\"")),
        };
        framed_from_parts(x, framing, zeta)
    }
}

fn framed_from_parts(x: Representation, framing: &BTreeMap<String, MatrixJson>, zeta: &[usize]) -> Result<FramedRep, CliError> {
    let n = x.quiver().vertex_count();
    if zeta.len() != n {
        return Err(input(format!("\"zeta\" has {} entries for {n} vertices", zeta.len())));
    }
    if let Some(key) = framing.keys().find(|k| k.parse::<usize>().map_or(true, |v| v == 0 || v > n)) {
        return Err(input(format!("framing key {key:?} is not a vertex")));
    }
    let mut maps = Vec::with_capacity(n);
    for v in 1..=n {
        let shape = (zeta[v - 1], x.dim(v));
        maps.push(match framing.get(&v.to_string()) {
            Some(rows) => matrix_from_json(rows, shape, &format!("framing at vertex {v}"))?,
            None => Matrix::zeros(shape.0, shape.1),
        });
    }
    Ok(FramedRep::new(x, zeta.to_vec(), maps)?)
}

/// A graded subspace as column vectors per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient: Vec<usize>,
    pub columns: Vec<Vec<Vec<String>>>,
}

impl SubspaceJson {
    pub fn from_blocks(ambient: &[usize], blocks: &[Matrix]) -> Self {
        let columns =
            blocks.iter().map(|b| (0..b.cols()).map(|j| b.column(j).iter().map(format_scalar).collect()).collect()).collect();
        SubspaceJson { ambient: ambient.to_vec(), columns }
    }

    pub fn from_subspace(u: &GradedSubspace) -> Self {
        SubspaceJson::from_blocks(u.ambient(), u.bases())
    }

    /// The columns as matrices, one per vertex, in the order given.
    pub fn blocks(&self) -> Result<Vec<Matrix>, CliError> {
        if self.columns.len() != self.ambient.len() {
            return Err(input(format!("\"columns\" has {} vertices, \"ambient\" has {}", self.columns.len(), self.ambient.len())));
        }
        let mut blocks = Vec::with_capacity(self.ambient.len());
        for (v, (cols, &d)) in self.columns.iter().zip(&self.ambient).enumerate() {
            let what = format!("subspace column at vertex {}", v + 1);
            let mut parsed = Vec::with_capacity(cols.len());
            for c in cols {
                if c.len() != d {
                    return Err(input(format!("{what}: {} entries, expected {d}", c.len())));
                }
                parsed.push(c.iter().map(|x| scalar_from_json(x, &what)).collect::<Result<Vec<_>, _>>()?);
            }
            blocks.push(Matrix::from_fn(d, parsed.len(), |i, j| parsed[j][i].clone()));
        }
        Ok(blocks)
    }

    pub fn subspace(&self) -> Result<GradedSubspace, CliError> {
        Ok(GradedSubspace::new(self.ambient.clone(), self.blocks()?)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    pub lambda: String,
    pub r: Vec<usize>,
}

impl RootJson {
    pub fn from_root((lambda, r): &(Scalar, Vec<usize>)) -> Self {
        RootJson { lambda: format_scalar(lambda), r: r.clone() }
    }
}

fn roots_from_json(roots: &[RootJson]) -> Result<RootData, CliError> {
    let parsed = roots
        .iter()
        .map(|r| Ok((scalar_from_json(&r.lambda, "root")?, r.r.clone())))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(RootData::new(parsed))
}

/// Root data of one cyclic quiver; `r` is indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDataJson {
    pub roots: Vec<RootJson>,
}

impl RootDataJson {
    pub fn root_data(&self) -> Result<RootData, CliError> {
        roots_from_json(&self.roots)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicSpecJson {
    pub n: usize,
    pub alpha: Vec<usize>,
    pub zeta: Vec<usize>,
}

/// Roots of one pasted cycle; `vertex` is any vertex on it and `r` follows the cycle from its
/// smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRootsJson {
    pub vertex: usize,
    pub roots: Vec<RootJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiRootsJson {
    pub cycles: Vec<CycleRootsJson>,
    /// Dimensions at vertices on no cycle, keyed by vertex; missing vertices have dimension 0.
    #[serde(default)]
    pub acyclic: BTreeMap<String, usize>,
}

impl MultiRootsJson {
    pub fn from_roots(decomp: &SuccessiveDecomposition, mrd: &MultiRootData) -> Self {
        let mut cycles = Vec::new();
        let mut acyclic = BTreeMap::new();
        for (comp, rd) in decomp.components.iter().zip(&mrd.components) {
            if comp.is_cycle() {
                cycles.push(CycleRootsJson { vertex: comp.vertices[0], roots: rd.roots.iter().map(RootJson::from_root).collect() });
            } else {
                acyclic.insert(comp.vertices[0].to_string(), rd.roots[0].1[0]);
            }
        }
        MultiRootsJson { cycles, acyclic }
    }

    pub fn multi_root_data(&self, decomp: &SuccessiveDecomposition) -> Result<MultiRootData, CliError> {
        let n = decomp.quiver.vertex_count();
        let mut slots: Vec<Option<RootData>> = vec![None; decomp.components.len()];
        for cycle in &self.cycles {
            if cycle.vertex == 0 || cycle.vertex > n {
                return Err(input(format!("cycle vertex {} is not a vertex", cycle.vertex)));
            }
            let c = decomp.component_of[cycle.vertex - 1];
            if !decomp.components[c].is_cycle() {
                return Err(input(format!("vertex {} lies on no cycle", cycle.vertex)));
            }
            if slots[c].is_some() {
                return Err(input(format!("roots of the cycle through {} are given twice", cycle.vertex)));
            }
            slots[c] = Some(roots_from_json(&cycle.roots)?);
        }
        for (key, &dim) in &self.acyclic {
            let v: usize = key.parse().map_err(|_| input(format!("\"acyclic\" key {key:?} is not a vertex")))?;
            if v == 0 || v > n || decomp.component(v).is_cycle() {
                return Err(input(format!("\"acyclic\" key {key:?} is not a vertex off the cycles")));
            }
            slots[decomp.component_of[v - 1]] = Some(MultiRootData::degenerate(dim));
        }
        let components = decomp
            .components
            .iter()
            .zip(slots)
            .map(|(comp, slot)| match slot {
                Some(rd) => Ok(rd),
                None if comp.is_cycle() => Err(input(format!("no roots for the cycle through {}", comp.vertices[0]))),
                None => Ok(MultiRootData::degenerate(0)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mrd = MultiRootData::new(components);
        mrd.validate(decomp)?;
        Ok(mrd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbientJson {
    pub vertex: usize,
    pub dim: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelJson {
    pub q: usize,
    pub copy: usize,
    pub s: usize,
}

impl LabelJson {
    pub fn from_label(l: &StringLabel) -> Self {
        LabelJson { q: l.q, copy: l.copy, s: l.s }
    }
}

/// A coefficient and its factors, each a vertex with Plücker indices.
pub type MonomialJson = (String, Vec<(usize, Vec<usize>)>);

/// One equation: `monomials` lists [coefficient, [[vertex, [indices…]], …]].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationJson {
    pub tag: String,
    pub monomials: Vec<MonomialJson>,
    /// Readable form; ignored when reading.
    #[serde(default)]
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedJson {
    pub linear: Vec<String>,
    pub nonlinear: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationSetJson {
    pub ambient: Vec<AmbientJson>,
    pub equations: Vec<EquationJson>,
    #[serde(default)]
    pub index_map: Vec<LabelJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced: Option<ReducedJson>,
}

impl EquationSetJson {
    pub fn from_set(eqs: &EquationSet) -> Self {
        let ambient = eqs.ambient.iter().map(|a| AmbientJson { vertex: a.vertex, dim: a.dim, degree: a.degree }).collect();
        let equations = eqs
            .equations
            .iter()
            .map(|e| EquationJson {
                tag: e.tag.as_str().to_string(),
                monomials: e
                    .terms
                    .iter()
                    .map(|(c, m)| (format_scalar(c), m.iter().map(|x| (x.vertex, x.indices.clone())).collect()))
                    .collect(),
                text: cyclic_fibers::format_polynomial(&e.polynomial()),
            })
            .collect();
        let index_map = eqs.index_map.iter().map(LabelJson::from_label).collect();
        EquationSetJson { ambient, equations, index_map, reduced: None }
    }

    pub fn equation_set(&self) -> Result<EquationSet, CliError> {
        let ambient = self.ambient.iter().map(|a| VertexAmbient { vertex: a.vertex, dim: a.dim, degree: a.degree }).collect();
        let mut equations = Vec::with_capacity(self.equations.len());
        for e in &self.equations {
            let tag: EquationTag = e.tag.parse().map_err(input)?;
            let mut terms = Vec::with_capacity(e.monomials.len());
            for (coef, mono) in &e.monomials {
                let mut m: Vec<Coordinate> =
                    mono.iter().map(|(vertex, indices)| Coordinate { vertex: *vertex, indices: indices.clone() }).collect();
                m.sort();
                terms.push((scalar_from_json(coef, "equation coefficient")?, m));
            }
            equations.push(Equation { tag, terms });
        }
        let index_map = self.index_map.iter().map(|l| StringLabel { q: l.q, copy: l.copy, s: l.s }).collect();
        let set = EquationSet { ambient, equations, index_map };
        if !set.is_in_bounds() {
            return Err(input("an equation uses a coordinate outside its vertex's exterior power"));
        }
        Ok(set)
    }
}
