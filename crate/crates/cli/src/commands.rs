//! One function per subcommand, each producing a serializable report.

use std::fmt::Write as _;

use algebra_core::{build_quotient_basis, format_scalar, verify_regular_ideal};
use cyclic_fibers::{
    coordinates_for, cyclic_pluecker_equations, evaluate_equations, fiber_components, format_polynomial,
    jordan_pluecker_equations, reduce_by_linear, CyclicQuiverSpec,
};
use framed::{default_cycle_bound, framing_existence, is_stable, null_cone_membership, product_of_cycles_vanishes};
use grassmannian::{
    build_dagger, build_injective, dagger_condition, dagger_report, grass_membership, image_of, kernel_phi, phi, recover,
    GrassError, InjectiveModule,
};
use rep_core::{is_subrepresentation, maximal_submodule_in, socle};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use successive_cycles::{
    ambient_socle_multiplicities, build_spade, cycle_char_polys, cyclic_socle_multiplicities, detect_successive,
    framing_existence_cyclic, SpadeBundle, SpadeLabel, SuccessiveDecomposition, SuccessiveError,
};

use crate::acceptance;
use crate::error::{input, CliError};
use crate::schema::{
    matrix_to_json, CyclicSpecJson, EquationSetJson, FramingJson, LabelJson, MatrixJson, MultiRootsJson, QuiverJson,
    ReducedJson, RepJson, RootDataJson, SubspaceJson,
};

pub trait Report: Serialize + DeserializeOwned {
    fn text(&self) -> String;

    /// Whether the property decided by the command holds; false gives exit code 1.
    fn holds(&self) -> bool {
        true
    }
}

fn dims_text(d: &[usize]) -> String {
    format!("({})", d.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn injective_of(qj: &QuiverJson, zeta: &[usize]) -> Result<InjectiveModule, CliError> {
    let q = qj.quiver()?;
    if zeta.len() != q.vertex_count() {
        return Err(input(format!("\"zeta\" has {} entries for {} vertices", zeta.len(), q.vertex_count())));
    }
    let rho = qj.relation_set(&q)?;
    let basis = build_quotient_basis(&q, &rho)?;
    Ok(build_injective(&basis, &zeta.to_vec()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub dim: usize,
    pub regular: bool,
    pub paths: Vec<String>,
}

impl Report for BasisReport {
    fn text(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        for p in &self.paths {
            let _ = writeln!(out, "{p}");
        }
        out
    }
}

pub fn basis(qj: &QuiverJson) -> Result<BasisReport, CliError> {
    let q = qj.quiver()?;
    let rho = qj.relation_set(&q)?;
    let b = build_quotient_basis(&q, &rho)?;
    Ok(BasisReport { dim: b.dim(), regular: verify_regular_ideal(&q, &rho), paths: b.path_names() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub stable: bool,
    /// The largest submodule inside ker f.
    pub kernel: SubspaceJson,
}

impl Report for StabilityReport {
    fn text(&self) -> String {
        if self.stable {
            "stable\n".into()
        } else {
            let dims: Vec<usize> = self.kernel.columns.iter().map(Vec::len).collect();
            format!("unstable: ker f contains a submodule of dimension {}\n", dims_text(&dims))
        }
    }

    fn holds(&self) -> bool {
        self.stable
    }
}

pub fn stability(qj: &QuiverJson, rep: &RepJson, framing: Option<&FramingJson>) -> Result<StabilityReport, CliError> {
    let fr = rep.framed(&qj.quiver()?, framing)?;
    let kernel = maximal_submodule_in(fr.rep(), &fr.framing_kernel());
    Ok(StabilityReport { stable: is_stable(&fr), kernel: SubspaceJson::from_subspace(&kernel) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSimpleJson {
    pub cycle: Vec<usize>,
    pub lambda: String,
    pub multiplicity: usize,
    /// Multiplicity in the socle of the ambient module: the framing dimensions summed over the cycle.
    pub available: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramingReport {
    pub exists: bool,
    pub socle: Vec<usize>,
    pub cycle_simples: Vec<CycleSimpleJson>,
    pub witness: Option<RepJson>,
}

impl Report for FramingReport {
    fn text(&self) -> String {
        let mut out = format!("socle {}\n", dims_text(&self.socle));
        for c in &self.cycle_simples {
            let _ = writeln!(out, "S({}, {}) multiplicity {} of {}", dims_text(&c.cycle), c.lambda, c.multiplicity, c.available);
        }
        out.push_str(if self.exists { "a stable framing exists\n" } else { "no stable framing\n" });
        out
    }

    fn holds(&self) -> bool {
        self.exists
    }
}

pub fn framing_exists(qj: &QuiverJson, rep: &RepJson, zeta: &[usize]) -> Result<FramingReport, CliError> {
    let q = qj.quiver()?;
    let m = rep.rep(&q)?;
    if zeta.len() != q.vertex_count() {
        return Err(input(format!("\"zeta\" has {} entries for {} vertices", zeta.len(), q.vertex_count())));
    }
    if q.is_acyclic() {
        let (exists, witness) = framing_existence(&m, &zeta.to_vec());
        return Ok(FramingReport {
            exists,
            socle: socle(&m).dims(),
            cycle_simples: Vec::new(),
            witness: witness.as_ref().map(RepJson::from_framed),
        });
    }
    let d = detect_successive(&q)?;
    let report = cyclic_socle_multiplicities(&m, &d)?;
    let ambient = ambient_socle_multiplicities(&d, zeta, &report);
    let cycle_simples = report
        .cycle_simples
        .iter()
        .zip(&ambient.cycle_simples)
        .map(|((c, lambda, mult), (_, _, avail))| CycleSimpleJson {
            cycle: d.components[*c].vertices.clone(),
            lambda: format_scalar(lambda),
            multiplicity: *mult,
            available: *avail,
        })
        .collect();
    let (exists, witness) = framing_existence_cyclic(&m, &d, zeta)?;
    Ok(FramingReport {
        exists,
        socle: report.vertex_simples,
        cycle_simples,
        witness: witness.as_ref().map(RepJson::from_framed),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullconeReport {
    pub member: bool,
    pub cycle_products_vanish: bool,
    pub bound: usize,
}

impl Report for NullconeReport {
    fn text(&self) -> String {
        format!(
            "{}\nproducts of {} cycles {}\n",
            if self.member { "in the null cone" } else { "not in the null cone" },
            self.bound,
            if self.cycle_products_vanish { "vanish" } else { "do not vanish" }
        )
    }

    fn holds(&self) -> bool {
        self.member
    }
}

pub fn nullcone(qj: &QuiverJson, rep: &RepJson, bound: Option<usize>) -> Result<NullconeReport, CliError> {
    let x = rep.rep(&qj.quiver()?)?;
    let bound = bound.unwrap_or_else(|| default_cycle_bound(&x));
    Ok(NullconeReport {
        member: null_cone_membership(&x),
        cycle_products_vanish: product_of_cycles_vanishes(&x, bound),
        bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectiveReport {
    pub dims: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    pub module: RepJson,
}

impl Report for InjectiveReport {
    fn text(&self) -> String {
        let mut out = format!("dim J = {}\n", dims_text(&self.dims));
        for (v, labels) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "J{}: {}", v + 1, labels.join(" "));
        }
        out
    }
}

fn label_names(j: &InjectiveModule) -> Vec<Vec<String>> {
    j.labels.labels.iter().map(|ls| ls.iter().map(|l| j.label_name(l)).collect()).collect()
}

pub fn injective(qj: &QuiverJson, zeta: &[usize]) -> Result<InjectiveReport, CliError> {
    let j = injective_of(qj, zeta)?;
    Ok(InjectiveReport { dims: j.dims().to_vec(), labels: label_names(&j), module: RepJson::from_rep(&j.rep) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiReport {
    pub stable: bool,
    pub embedding: Vec<MatrixJson>,
    pub image: SubspaceJson,
    pub kernel_dims: Vec<usize>,
}

impl Report for PhiReport {
    fn text(&self) -> String {
        let dims: Vec<usize> = self.image.columns.iter().map(Vec::len).collect();
        format!(
            "image dimension {}\nkernel dimension {}\n{}\n",
            dims_text(&dims),
            dims_text(&self.kernel_dims),
            if self.stable { "injective" } else { "not injective" }
        )
    }
}

pub fn phi_command(qj: &QuiverJson, rep: &RepJson, framing: Option<&FramingJson>) -> Result<PhiReport, CliError> {
    let q = qj.quiver()?;
    let fr = rep.framed(&q, framing)?;
    let j = injective_of(qj, fr.zeta())?;
    let map = phi(&fr, &j);
    Ok(PhiReport {
        stable: is_stable(&fr),
        embedding: map.blocks.iter().map(matrix_to_json).collect(),
        image: SubspaceJson::from_subspace(&image_of(&map)),
        kernel_dims: kernel_phi(&fr, &j).dims(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoverReport {
    pub submodule: bool,
    pub framed: Option<RepJson>,
    pub stable: Option<bool>,
}

impl Report for RecoverReport {
    fn text(&self) -> String {
        match (&self.framed, self.stable) {
            (Some(fr), Some(stable)) => {
                format!("recovered dimension {}, {}\n", dims_text(&fr.dims), if stable { "stable" } else { "unstable" })
            }
            _ => "not a submodule of J\n".into(),
        }
    }

    fn holds(&self) -> bool {
        self.submodule
    }
}

pub fn recover_command(qj: &QuiverJson, zeta: &[usize], sub: &SubspaceJson) -> Result<RecoverReport, CliError> {
    let j = injective_of(qj, zeta)?;
    let blocks = sub.blocks()?;
    if sub.ambient != j.dims() {
        return Err(input(format!("subspace ambient {} differs from dim J = {}", dims_text(&sub.ambient), dims_text(j.dims()))));
    }
    match recover(&blocks, &j) {
        Ok(fr) => Ok(RecoverReport { submodule: true, stable: Some(is_stable(&fr)), framed: Some(RepJson::from_framed(&fr)) }),
        Err(GrassError::NotSubmodule) => Ok(RecoverReport { submodule: false, framed: None, stable: None }),
        Err(GrassError::NotInjective(v)) => Err(input(format!("the columns at vertex {v} are linearly dependent"))),
        Err(e) => Err(e.into()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassReport {
    pub member: bool,
    pub dagger_condition: bool,
    pub dims: Vec<usize>,
}

impl Report for GrassReport {
    fn text(&self) -> String {
        format!(
            "{} of dimension {}\ninclusion system {}\n",
            if self.member { "submodule" } else { "not a submodule" },
            dims_text(&self.dims),
            if self.dagger_condition { "holds" } else { "fails" }
        )
    }

    fn holds(&self) -> bool {
        self.member
    }
}

pub fn grass_check(qj: &QuiverJson, zeta: &[usize], sub: &SubspaceJson) -> Result<GrassReport, CliError> {
    let j = injective_of(qj, zeta)?;
    let u = sub.subspace()?;
    if u.ambient() != j.dims() {
        return Err(input(format!("subspace ambient {} differs from dim J = {}", dims_text(u.ambient()), dims_text(j.dims()))));
    }
    let d = build_dagger(&j);
    Ok(GrassReport { member: grass_membership(&u, &j), dagger_condition: dagger_condition(&u, &j, &d), dims: u.dims() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaggerJson {
    pub arrow: String,
    pub tail: usize,
    pub head: usize,
    /// Labels of J_tail reached by the arrow, in the order of the dagger columns.
    pub tilde: Vec<String>,
    /// Labels spanning the kernel of the arrow, when the kernel is a label span.
    pub kernel: Option<Vec<String>>,
    pub dagger: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaggerReport {
    pub dims: Vec<usize>,
    pub arrows: Vec<DaggerJson>,
    pub inclusions: Vec<String>,
}

impl Report for DaggerReport {
    fn text(&self) -> String {
        self.inclusions.iter().map(|l| format!("{l}\n")).collect()
    }
}

pub fn dagger_command(qj: &QuiverJson, zeta: &[usize]) -> Result<DaggerReport, CliError> {
    let j = injective_of(qj, zeta)?;
    let d = build_dagger(&j);
    let q = j.rep.quiver();
    let names = label_names(&j);
    let arrows = d
        .arrows
        .iter()
        .map(|a| DaggerJson {
            arrow: q.arrow(a.arrow).id.clone(),
            tail: a.tail,
            head: a.head,
            tilde: a.tilde_labels.iter().map(|&p| names[a.tail - 1][p].clone()).collect(),
            kernel: a.kernel_labels.as_ref().map(|ps| ps.iter().map(|&p| names[a.tail - 1][p].clone()).collect()),
            dagger: matrix_to_json(&a.dagger),
        })
        .collect();
    Ok(DaggerReport { dims: j.dims().to_vec(), arrows, inclusions: dagger_report(&j, &d) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCountJson {
    pub lambda: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPolyJson {
    pub vertex: usize,
    /// Coefficients from the constant term up.
    pub coefficients: Vec<String>,
    pub roots: Vec<RootCountJson>,
    /// Degree of the factor without rational roots.
    pub irrational_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpolyReport {
    pub cycles: Vec<Vec<VertexPolyJson>>,
}

impl Report for CharpolyReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for p in self.cycles.iter().flatten() {
            let roots: Vec<String> = p.roots.iter().map(|r| format!("{}^{}", r.lambda, r.multiplicity)).collect();
            let _ = writeln!(out, "vertex {}: [{}] roots {}", p.vertex, p.coefficients.join(", "), roots.join(" "));
        }
        out
    }
}

pub fn charpolys(qj: &QuiverJson, rep: &RepJson) -> Result<CharpolyReport, CliError> {
    let q = qj.quiver()?;
    let x = rep.rep(&q)?;
    let d = detect_successive(&q)?;
    let polys = cycle_char_polys(&x, &d);
    let cycles = d
        .components
        .iter()
        .zip(polys)
        .filter(|(comp, _)| comp.is_cycle())
        .map(|(comp, ps)| {
            comp.vertices
                .iter()
                .zip(ps)
                .map(|(&v, p)| {
                    let (roots, rest) = p.rational_roots();
                    VertexPolyJson {
                        vertex: v,
                        coefficients: p.coeffs().iter().map(format_scalar).collect(),
                        roots: roots
                            .iter()
                            .map(|(l, m)| RootCountJson { lambda: format_scalar(l), multiplicity: *m })
                            .collect(),
                        irrational_degree: rest.degree().unwrap_or(0),
                    }
                })
                .collect()
        })
        .collect();
    Ok(CharpolyReport { cycles })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub lambda: String,
    pub r: Vec<usize>,
    pub order: usize,
    pub labels: Vec<LabelJson>,
    pub module: RepJson,
    pub equations: EquationSetJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub quiver: QuiverJson,
    pub factors: Vec<FactorJson>,
}

impl Report for FiberReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for f in &self.factors {
            let _ = writeln!(
                out,
                "factor λ = {}, r = {}, dim {}, {} equations",
                f.lambda,
                dims_text(&f.r),
                f.labels.len(),
                f.equations.equations.len()
            );
            for e in &f.equations.equations {
                let _ = writeln!(out, "  [{}] {} = 0", e.tag, e.text);
            }
        }
        out
    }
}

pub fn fiber(spec: &CyclicSpecJson, roots: &RootDataJson) -> Result<FiberReport, CliError> {
    let spec = CyclicQuiverSpec::new(spec.n, spec.alpha.clone(), spec.zeta.clone())?;
    let rd = roots.root_data()?;
    let mut factors = Vec::new();
    for (j, r) in fiber_components(&spec, &rd)? {
        let local = CyclicQuiverSpec::new(spec.n, r.clone(), spec.zeta.clone())?;
        let eqs = cyclic_pluecker_equations(&local, &j.lambda)?;
        factors.push(FactorJson {
            lambda: format_scalar(&j.lambda),
            r,
            order: j.order,
            labels: j.labels.iter().map(LabelJson::from_label).collect(),
            module: RepJson::from_rep(&j.rep),
            equations: EquationSetJson::from_set(&eqs),
        });
    }
    Ok(FiberReport { quiver: QuiverJson::from_quiver(&spec.quiver(), None), factors })
}

impl Report for EquationSetJson {
    fn text(&self) -> String {
        let mut out = String::new();
        for e in &self.equations {
            let _ = writeln!(out, "[{}] {} = 0", e.tag, e.text);
        }
        if let Some(r) = &self.reduced {
            out.push_str("reduced:\n");
            for p in r.linear.iter().chain(&r.nonlinear) {
                let _ = writeln!(out, "  {p} = 0");
            }
        }
        out
    }
}

pub fn equations(m: usize, q: usize) -> EquationSetJson {
    let eqs = jordan_pluecker_equations(m, q);
    let polys: Vec<_> = eqs.equations.iter().map(|e| e.polynomial()).collect();
    let reduced = reduce_by_linear(&polys);
    let mut out = EquationSetJson::from_set(&eqs);
    out.reduced = Some(ReducedJson {
        linear: reduced.linear.iter().map(format_polynomial).collect(),
        nonlinear: reduced.nonlinear.iter().map(format_polynomial).collect(),
    });
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualJson {
    pub equation: usize,
    pub tag: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub satisfied: bool,
    pub residuals: Vec<ResidualJson>,
}

impl Report for CheckReport {
    fn text(&self) -> String {
        let mut out = String::from(if self.satisfied { "all equations vanish\n" } else { "nonzero residuals:\n" });
        for r in &self.residuals {
            let _ = writeln!(out, "  equation {} [{}]: {}", r.equation, r.tag, r.value);
        }
        out
    }

    fn holds(&self) -> bool {
        self.satisfied
    }
}

pub fn check_point(eqs: &EquationSetJson, sub: &SubspaceJson) -> Result<CheckReport, CliError> {
    let set = eqs.equation_set()?;
    let u = sub.subspace()?;
    let residuals = evaluate_equations(&set, &coordinates_for(&set, &u)?)?;
    Ok(CheckReport {
        satisfied: residuals.is_empty(),
        residuals: residuals
            .iter()
            .map(|r| ResidualJson { equation: r.equation, tag: r.tag.as_str().into(), value: format_scalar(&r.value) })
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpadeBundleJson {
    pub quiver: QuiverJson,
    pub roots: MultiRootsJson,
    pub zeta: Vec<usize>,
    pub names: Vec<String>,
    pub spade_quiver: QuiverJson,
    pub alpha_tilde: Vec<usize>,
    pub w_spade: RepJson,
    pub labels: Vec<Vec<String>>,
}

/// `path/factors/target[copy]`, with base arrow ids joined by "." and one `root:s` or `-` per visit.
fn spade_label_name(d: &SuccessiveDecomposition, label: &SpadeLabel) -> String {
    let path = if label.path.is_empty() {
        "e".to_string()
    } else {
        label.path.iter().map(|&k| d.quiver.arrow(k).id.as_str()).collect::<Vec<_>>().join(".")
    };
    let factors: Vec<String> =
        label.factors.iter().map(|f| f.map_or_else(|| "-".to_string(), |(l, s)| format!("{}:{s}", l + 1))).collect();
    format!("{path}/{}/{}[{}]", factors.join(","), label.target, label.copy)
}

impl SpadeBundleJson {
    pub fn from_bundle(b: &SpadeBundle) -> Self {
        let d = &b.decomposition;
        SpadeBundleJson {
            quiver: QuiverJson::from_quiver(&d.quiver, None),
            roots: MultiRootsJson::from_roots(d, &b.roots),
            zeta: b.zeta.clone(),
            names: b.names.clone(),
            spade_quiver: QuiverJson::from_quiver(&b.spade_quiver, None),
            alpha_tilde: b.alpha_tilde.clone(),
            w_spade: RepJson::from_rep(&b.w_spade),
            labels: b.labels.iter().map(|ls| ls.iter().map(|l| spade_label_name(d, l)).collect()).collect(),
        }
    }

    /// Rebuilds the bundle from its quiver, roots and framing, and checks the stored data against it.
    pub fn bundle(&self) -> Result<SpadeBundle, CliError> {
        let b = spade(&self.quiver, &self.roots, &self.zeta)?;
        let rebuilt = SpadeBundleJson::from_bundle(&b);
        if rebuilt.spade_quiver != self.spade_quiver || rebuilt.alpha_tilde != self.alpha_tilde || rebuilt.w_spade != self.w_spade {
            return Err(input("the stored spade quiver or module does not match the quiver, roots and zeta of the bundle"));
        }
        Ok(b)
    }
}

impl Report for SpadeBundleJson {
    fn text(&self) -> String {
        let mut out = String::new();
        for ((name, d), w) in self.names.iter().zip(&self.alpha_tilde).zip(&self.w_spade.dims) {
            let _ = writeln!(out, "vertex {name}: α̃ = {d}, dim W = {w}");
        }
        for a in &self.spade_quiver.arrows {
            let _ = writeln!(out, "arrow {}: {} → {}", a.id, self.names[a.from - 1], self.names[a.to - 1]);
        }
        out
    }
}

pub fn spade(qj: &QuiverJson, roots: &MultiRootsJson, zeta: &[usize]) -> Result<SpadeBundle, CliError> {
    let q = qj.quiver()?;
    let d = detect_successive(&q)?;
    let mrd = roots.multi_root_data(&d)?;
    Ok(build_spade(&d, &mrd, zeta)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpadeCheckReport {
    pub submodule: bool,
    pub dims: Vec<usize>,
    pub dims_match: bool,
    pub stable: Option<bool>,
    pub char_polys_match: Option<bool>,
    pub round_trip: Option<bool>,
    pub failure: Option<String>,
    pub recovered: Option<RepJson>,
}

impl Report for SpadeCheckReport {
    fn text(&self) -> String {
        let flag = |b: Option<bool>| b.map_or("not checked", |x| if x { "yes" } else { "no" });
        let mut out = format!(
            "submodule: {}\ndimension {} matches α̃: {}\nstable: {}\ncharacteristic polynomials match: {}\nround trip: {}\n",
            flag(Some(self.submodule)),
            dims_text(&self.dims),
            flag(Some(self.dims_match)),
            flag(self.stable),
            flag(self.char_polys_match),
            flag(self.round_trip)
        );
        if let Some(f) = &self.failure {
            let _ = writeln!(out, "failure: {f}");
        }
        out
    }

    fn holds(&self) -> bool {
        self.submodule && self.dims_match && self.stable == Some(true) && self.char_polys_match == Some(true) && self.round_trip == Some(true)
    }
}

pub fn spade_check(bundle: &SpadeBundleJson, sub: &SubspaceJson) -> Result<SpadeCheckReport, CliError> {
    let b = bundle.bundle()?;
    let u = sub.subspace()?;
    if u.ambient() != b.w_spade.dims() {
        return Err(input(format!(
            "subspace ambient {} differs from dim W♠ = {}",
            dims_text(u.ambient()),
            dims_text(b.w_spade.dims())
        )));
    }
    let mut report = SpadeCheckReport {
        submodule: is_subrepresentation(&u, &b.w_spade),
        dims: u.dims(),
        dims_match: u.dims() == b.alpha_tilde,
        stable: None,
        char_polys_match: None,
        round_trip: None,
        failure: None,
        recovered: None,
    };
    if !(report.submodule && report.dims_match) {
        return Ok(report);
    }
    match b.recover(&u) {
        Ok((fr, bases)) => {
            let d = &b.decomposition;
            report.stable = Some(is_stable(&fr));
            report.char_polys_match = Some(cycle_char_polys(fr.rep(), d) == b.roots.char_polys(d));
            let again = b.embed(&fr)?;
            report.round_trip = Some(again.blocks == bases && b.spade_point(&again.blocks) == u);
            report.recovered = Some(RepJson::from_framed(&fr));
        }
        Err(e @ (SuccessiveError::CharPolyMismatch | SuccessiveError::NotSubmodule | SuccessiveError::DimensionMismatch { .. })) => {
            report.failure = Some(e.to_string());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionJson {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub passed: bool,
    pub criteria: Vec<CriterionJson>,
}

impl Report for SelftestReport {
    fn text(&self) -> String {
        self.criteria.iter().map(|c| format!("{}\n", acceptance::line(c))).collect()
    }

    fn holds(&self) -> bool {
        self.passed
    }
}

pub fn selftest(seed: u64) -> SelftestReport {
    let criteria = acceptance::run_all(seed);
    SelftestReport { passed: criteria.iter().all(|c| c.passed), criteria }
}
