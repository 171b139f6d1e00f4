//! Human tables and `--json` documents.

use homlie_core::algebra::{format_combination, pairs};
use homlie_core::catalog::{LoopFailure, LoopVerdict};
use homlie_core::linalg::format_scalar;
use homlie_core::maps::TheoremReport;
use homlie_core::reduction::{ReductionReport, Stall, TraceStep};
use homlie_core::{
    HomLieAlgebra, Hypothesis, MapKind, MapSpace, Matrix, Scalar, SimplicityVerdict, Subspace,
    ValidationReport, Verdict,
};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::files::emit_matrix;

pub fn hypothesis_name(h: Hypothesis) -> &'static str {
    match h {
        Hypothesis::Perfect => "perfect",
        Hypothesis::Centerless => "centerless",
        Hypothesis::AlphaSurjective => "alpha-surjective",
        Hypothesis::AlphaInvertible => "alpha-invertible",
        Hypothesis::BetaInvertible => "beta-invertible",
        Hypothesis::FaithfulOnAlgebra => "faithful-on-algebra",
        Hypothesis::FaithfulOnDerived => "faithful-on-derived",
        Hypothesis::Simple => "simple",
        Hypothesis::BiderivationsCentroidInduced => "biderivations-centroid-induced",
        Hypothesis::NonzeroCenter => "nonzero-center",
        Hypothesis::DerivedCodimAtLeastTwo => "derived-codim-at-least-two",
    }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Left-aligned columns separated by at least two spaces.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::from(" ");
        for (c, cell) in row.iter().enumerate() {
            line.push(' ');
            line.push_str(cell);
            if c + 1 < row.len() {
                let pad = widths[c] - cell.chars().count() + 1;
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

// Map spaces

#[derive(Serialize)]
#[serde(untagged)]
enum BasisJson {
    Bilinear(Vec<Vec<Vec<String>>>),
    Linear(Vec<Vec<String>>),
}

#[derive(Serialize)]
pub struct MapSpaceJson {
    kind: &'static str,
    algebra_dim: usize,
    module_dim: usize,
    dim: usize,
    basis: Vec<BasisJson>,
}

impl MapSpaceJson {
    pub fn new(space: &MapSpace) -> Self {
        let basis = if space.kind().is_bilinear() {
            space
                .bilinear_basis()
                .iter()
                .map(|d| {
                    BasisJson::Bilinear(
                        d.tensor()
                            .iter()
                            .map(|row| row.iter().map(|v| strings(v)).collect())
                            .collect(),
                    )
                })
                .collect()
        } else {
            space
                .linear_basis()
                .iter()
                .map(|f| BasisJson::Linear(emit_matrix(f)))
                .collect()
        };
        Self {
            kind: space.kind().name(),
            algebra_dim: space.module().algebra().dim(),
            module_dim: space.module().dim(),
            dim: space.dim(),
            basis,
        }
    }
}

fn symbol(kind: MapKind) -> &'static str {
    match kind {
        MapKind::Cent => "γ",
        MapKind::Com | MapKind::CCom | MapKind::SCom => "f",
        _ => "δ",
    }
}

/// `(k1 + 2·k2)·e3` style term for coefficient form `form` over the
/// parameters `ks`, with its sign split off.
fn parametric_term(form: &[Scalar], ks: &[String], vname: &str) -> Option<(bool, String)> {
    let support: Vec<usize> = (0..form.len()).filter(|&m| !form[m].is_zero()).collect();
    match support.as_slice() {
        [] => None,
        [m] => {
            let c = &form[*m];
            let mag = c.abs();
            let coeff = if mag.is_one() {
                ks[*m].clone()
            } else {
                format!("{}·{}", format_scalar(&mag), ks[*m])
            };
            Some((c.is_negative(), format!("{coeff}·{vname}")))
        }
        _ => Some((false, format!("({})·{vname}", format_combination(ks, form)))),
    }
}

/// Sum of the parametric terms for one value, `0` when empty.
fn parametric_value(forms: &[Vec<Scalar>], ks: &[String], vnames: &[String]) -> String {
    let mut out = String::new();
    for (form, vname) in forms.iter().zip(vnames) {
        if let Some((negative, term)) = parametric_term(form, ks, vname) {
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Argument labels of each value slot: `(e1,e2)` pairs for bilinear kinds,
/// `(e1)` for linear kinds.
/// Value of basis map `m` at one slot.
type SlotValue = Box<dyn Fn(usize) -> Vec<Scalar>>;

fn slots(space: &MapSpace) -> Vec<(String, SlotValue)> {
    let l = space.module().algebra();
    let names = l.basis_names();
    let n = l.dim();
    let kind = space.kind();
    let sym = symbol(kind);
    if kind.is_bilinear() {
        let maps = space.bilinear_basis();
        let index: Vec<(usize, usize)> = if kind.is_skew() {
            pairs(n).collect()
        } else {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
        };
        index
            .into_iter()
            .map(|(i, j)| {
                let maps = maps.clone();
                let f: SlotValue = Box::new(move |m| maps[m].value(i, j).clone());
                (format!("{sym}({},{})", names[i], names[j]), f)
            })
            .collect()
    } else {
        let maps = space.linear_basis();
        (0..n)
            .map(|i| {
                let maps = maps.clone();
                let f: SlotValue = Box::new(move |m| maps[m].column(i));
                (format!("{sym}({})", names[i]), f)
            })
            .collect()
    }
}

/// Basis maps and the general element, e.g. `δ(e1,e2) = k1·e2 + k2·e3`.
pub fn map_space_text(space: &MapSpace, vnames: &[String]) -> String {
    let dim = space.dim();
    let sym = symbol(space.kind());
    let slots = slots(space);
    let mut out = String::new();
    if dim > 0 {
        out.push_str("basis:\n");
        let mut rows = Vec::new();
        for m in 0..dim {
            let mut first = true;
            for (label, value) in &slots {
                let v = value(m);
                if v.iter().all(Zero::is_zero) {
                    continue;
                }
                let head = if first {
                    format!("{sym}{}:", m + 1)
                } else {
                    String::new()
                };
                first = false;
                rows.push(vec![
                    head,
                    label.clone(),
                    format!("= {}", format_combination(vnames, &v)),
                ]);
            }
            if first {
                rows.push(vec![format!("{sym}{}:", m + 1), "0".into()]);
            }
        }
        out.push_str(&table(&rows));
    }
    out.push_str("general element:\n");
    let ks: Vec<String> = (1..=dim).map(|m| format!("k{m}")).collect();
    let mut rows = Vec::new();
    for (label, value) in &slots {
        let columns: Vec<Vec<Scalar>> = (0..dim).map(value).collect();
        let forms: Vec<Vec<Scalar>> = (0..vnames.len())
            .map(|a| columns.iter().map(|c| c[a].clone()).collect())
            .collect();
        let text = parametric_value(&forms, &ks, vnames);
        if text != "0" {
            rows.push(vec![label.clone(), format!("= {}", text)]);
        }
    }
    if rows.is_empty() {
        out.push_str("  0\n");
    } else {
        out.push_str(&table(&rows));
        out.push_str("  (all other values zero)\n");
    }
    out
}

// Algebra facts

fn span_text(names: &[String], s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s
        .basis()
        .iter()
        .map(|v| format_combination(names, v))
        .collect();
    format!("span{{{}}}", parts.join(", "))
}

#[derive(Serialize)]
struct Residual3 {
    triple: [usize; 3],
    residual: Vec<String>,
}

#[derive(Serialize)]
struct Residual2 {
    pair: [usize; 2],
    residual: Vec<String>,
}

#[derive(Serialize)]
pub struct ValidationJson {
    accepted: bool,
    hom_jacobi_failures: Vec<Residual3>,
    multiplicativity_failures: Vec<Residual2>,
    alpha_invertible: bool,
    alpha_surjective: bool,
}

impl ValidationJson {
    pub fn new(r: &ValidationReport) -> Self {
        Self {
            accepted: r.is_accepted(),
            hom_jacobi_failures: r
                .hom_jacobi_failures
                .iter()
                .map(|((i, j, k), v)| Residual3 {
                    triple: [i + 1, j + 1, k + 1],
                    residual: strings(v),
                })
                .collect(),
            multiplicativity_failures: r
                .multiplicativity_failures
                .iter()
                .map(|((i, j), v)| Residual2 {
                    pair: [i + 1, j + 1],
                    residual: strings(v),
                })
                .collect(),
            alpha_invertible: r.alpha_invertible,
            alpha_surjective: r.alpha_surjective,
        }
    }
}

pub fn validation_text(l: &HomLieAlgebra, r: &ValidationReport) -> String {
    let names = l.basis_names();
    let mut out = String::new();
    if r.is_accepted() {
        out.push_str("accepted: multiplicative Hom-Lie algebra\n");
    } else {
        out.push_str("rejected\n");
    }
    let mut rows = Vec::new();
    for ((i, j, k), v) in &r.hom_jacobi_failures {
        rows.push(vec![
            "Hom-Jacobi".into(),
            format!("({},{},{})", names[*i], names[*j], names[*k]),
            format_combination(names, v),
        ]);
    }
    for ((i, j), v) in &r.multiplicativity_failures {
        rows.push(vec![
            "multiplicativity".into(),
            format!("({},{})", names[*i], names[*j]),
            format_combination(names, v),
        ]);
    }
    if !rows.is_empty() {
        rows.insert(0, vec!["law".into(), "basis".into(), "residual".into()]);
        out.push_str(&table(&rows));
    }
    out.push_str(&format!(
        "alpha invertible: {}\n",
        if r.alpha_invertible { "yes" } else { "no" }
    ));
    out
}

#[derive(Serialize)]
pub struct InfoJson {
    dim: usize,
    basis: Vec<String>,
    accepted: bool,
    alpha_invertible: bool,
    center: Vec<Vec<String>>,
    derived: Vec<Vec<String>>,
    abelian: bool,
    perfect: bool,
    centerless: bool,
}

impl InfoJson {
    pub fn new(l: &HomLieAlgebra) -> Self {
        let basis = |s: &Subspace| s.basis().iter().map(|v| strings(v)).collect();
        Self {
            dim: l.dim(),
            basis: l.basis_names().to_vec(),
            accepted: l.validate().is_accepted(),
            alpha_invertible: l.alpha_invertible(),
            center: basis(&l.center()),
            derived: basis(&l.derived()),
            abelian: l.is_abelian(),
            perfect: l.is_perfect(),
            centerless: l.is_centerless(),
        }
    }
}

pub fn info_text(l: &HomLieAlgebra) -> String {
    let names = l.basis_names();
    let yes = |b: bool| if b { "yes" } else { "no" }.to_string();
    let mut out = format!("dim {}: {}\n", l.dim(), names.join(", "));
    let mut rows: Vec<Vec<String>> = l
        .nonzero_brackets()
        .map(|(i, j, v)| {
            vec![
                format!("[{},{}]", names[i], names[j]),
                format!("= {}", format_combination(names, v)),
            ]
        })
        .collect();
    for (j, name) in names.iter().enumerate() {
        rows.push(vec![
            format!("α({name})"),
            format!("= {}", format_combination(names, &l.alpha().column(j))),
        ]);
    }
    out.push_str(&table(&rows));
    let center = l.center();
    let derived = l.derived();
    let facts = vec![
        vec!["accepted".into(), yes(l.validate().is_accepted())],
        vec!["alpha invertible".into(), yes(l.alpha_invertible())],
        vec![
            "center".into(),
            format!("{} (dim {})", span_text(names, &center), center.dim()),
        ],
        vec![
            "derived".into(),
            format!("{} (dim {})", span_text(names, &derived), derived.dim()),
        ],
        vec!["abelian".into(), yes(l.is_abelian())],
        vec!["perfect".into(), yes(l.is_perfect())],
        vec!["centerless".into(), yes(l.is_centerless())],
    ];
    out.push_str(&table(&facts));
    out
}

// Reductions

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
enum StallJson {
    Hypotheses(Vec<&'static str>),
    LevelLimit,
}

#[derive(Serialize)]
struct StepDims {
    algebra: usize,
    module: usize,
    reduced: usize,
    space: usize,
}

#[derive(Serialize)]
struct StepJson {
    level: usize,
    #[serde(rename = "move")]
    step: &'static str,
    dims: StepDims,
    kernel_dim: usize,
    lifted_dim: usize,
    kernel_matches: bool,
    stall: Option<StallJson>,
}

fn stall_json(s: &Stall) -> StallJson {
    match s {
        Stall::Hypotheses(hs) => {
            StallJson::Hypotheses(hs.iter().map(|h| hypothesis_name(*h)).collect())
        }
        Stall::LevelLimit => StallJson::LevelLimit,
    }
}

impl StepJson {
    fn new(s: &TraceStep) -> Self {
        Self {
            level: s.level,
            step: s.step.name(),
            dims: StepDims {
                algebra: s.algebra_dim,
                module: s.module_dim,
                reduced: s.reduced_dim,
                space: s.space_dim,
            },
            kernel_dim: s.kernel_dim,
            lifted_dim: s.lifted_dim,
            kernel_matches: s.kernel_matches,
            stall: s.stall.as_ref().map(stall_json),
        }
    }
}

#[derive(Serialize)]
pub struct ReductionJson {
    complete: bool,
    agrees_with_direct: bool,
    trace: Vec<StepJson>,
    space: MapSpaceJson,
}

impl ReductionJson {
    pub fn new(r: &ReductionReport) -> Self {
        Self {
            complete: r.is_complete(),
            agrees_with_direct: r.agrees_with_direct,
            trace: r.trace.iter().map(StepJson::new).collect(),
            space: MapSpaceJson::new(&r.space),
        }
    }
}

fn stall_text(s: &Stall) -> String {
    match s {
        Stall::Hypotheses(hs) => hs
            .iter()
            .map(|h| hypothesis_name(*h))
            .collect::<Vec<_>>()
            .join(","),
        Stall::LevelLimit => "level-limit".into(),
    }
}

pub fn trace_text(r: &ReductionReport) -> String {
    let mut rows = vec![[
        "level",
        "move",
        "dim L",
        "dim V",
        "reduced",
        "space",
        "kernel",
        "lifted",
        "kernel law",
        "stall",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect::<Vec<_>>()];
    for s in &r.trace {
        rows.push(vec![
            s.level.to_string(),
            s.step.name().into(),
            s.algebra_dim.to_string(),
            s.module_dim.to_string(),
            s.reduced_dim.to_string(),
            s.space_dim.to_string(),
            s.kernel_dim.to_string(),
            s.lifted_dim.to_string(),
            if s.kernel_matches { "holds" } else { "FAILS" }.into(),
            s.stall.as_ref().map_or_else(|| "-".into(), stall_text),
        ]);
    }
    table(&rows)
}

// Verifiers

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FalsifierJson {
    Abelian,
    ProperIdeal(Vec<Vec<String>>),
    NoCounterexample,
}

impl FalsifierJson {
    pub fn new(v: &SimplicityVerdict) -> Self {
        match v {
            SimplicityVerdict::Abelian => FalsifierJson::Abelian,
            SimplicityVerdict::ProperIdeal(s) => {
                FalsifierJson::ProperIdeal(s.basis().iter().map(|v| strings(v)).collect())
            }
            SimplicityVerdict::NoCounterexample => FalsifierJson::NoCounterexample,
        }
    }
}

#[derive(Serialize)]
struct DimJson {
    space: &'static str,
    dim: usize,
}

#[derive(Serialize)]
pub struct VerifyJson {
    check: &'static str,
    verdict: &'static str,
    failed_hypotheses: Vec<&'static str>,
    dims: Vec<DimJson>,
    falsifier: Option<FalsifierJson>,
}

pub fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Confirmed => "confirmed",
        Verdict::HypothesesFailed(_) => "hypotheses-failed",
        Verdict::InconclusiveOverQ => "inconclusive-over-q",
    }
}

impl VerifyJson {
    pub fn new(check: &'static str, r: &TheoremReport) -> Self {
        let failed = match &r.verdict {
            Verdict::HypothesesFailed(hs) => hs.iter().map(|h| hypothesis_name(*h)).collect(),
            _ => Vec::new(),
        };
        Self {
            check,
            verdict: verdict_name(&r.verdict),
            failed_hypotheses: failed,
            dims: r
                .dims
                .iter()
                .map(|(space, dim)| DimJson { space, dim: *dim })
                .collect(),
            falsifier: r.falsifier.as_ref().map(FalsifierJson::new),
        }
    }
}

fn dims_text(dims: &[(&'static str, usize)]) -> String {
    match dims {
        [] => String::new(),
        [(_, d), rest @ ..] if rest.iter().all(|(_, e)| e == d) && !rest.is_empty() => {
            format!("dim {d}")
        }
        _ => dims
            .iter()
            .map(|(s, d)| format!("dim {s} = {d}"))
            .collect::<Vec<_>>()
            .join(", "),
    }
}

pub fn verify_text(statement: &str, r: &TheoremReport, names: &[String]) -> String {
    let dims = dims_text(&r.dims);
    let suffix = if dims.is_empty() {
        String::new()
    } else {
        format!(", {dims}")
    };
    let mut out = match &r.verdict {
        Verdict::Confirmed => format!("confirmed: {statement}{suffix}\n"),
        Verdict::HypothesesFailed(hs) => {
            let mut s = format!("hypotheses failed for: {statement}{suffix}\n");
            for h in hs {
                s.push_str(&format!("  - {h}\n"));
            }
            s
        }
        Verdict::InconclusiveOverQ => {
            format!(
                "inconclusive over Q: {statement} not decided by rational computation{suffix}\n"
            )
        }
    };
    match &r.falsifier {
        Some(SimplicityVerdict::Abelian) => {
            out.push_str("simplicity falsifier: algebra is abelian\n")
        }
        Some(SimplicityVerdict::ProperIdeal(s)) => out.push_str(&format!(
            "simplicity falsifier: proper ideal {}\n",
            span_text(names, s)
        )),
        Some(SimplicityVerdict::NoCounterexample) => {
            out.push_str("simplicity falsifier: no proper ideal found (not a proof)\n")
        }
        None => {}
    }
    out
}

// Loop check

#[derive(Serialize)]
#[serde(tag = "law", rename_all = "kebab-case")]
enum LoopFailureJson {
    Bracket {
        u: String,
        v: String,
        residual: String,
    },
    Twist {
        u: String,
        residual: String,
    },
}

#[derive(Serialize)]
pub struct LoopJson {
    k: u32,
    power: u32,
    phi: String,
    window: u32,
    verdict: &'static str,
    equations: Option<usize>,
    failure: Option<LoopFailureJson>,
}

impl LoopJson {
    pub fn new(k: u32, power: u32, phi: String, window: u32, v: &LoopVerdict) -> Self {
        let (verdict, equations, failure) = match v {
            LoopVerdict::Confirmed { equations } => ("confirmed", Some(*equations), None),
            LoopVerdict::Rejected(f) => (
                "rejected",
                None,
                Some(match f {
                    LoopFailure::Bracket { u, v, residual } => LoopFailureJson::Bracket {
                        u: u.to_string(),
                        v: v.to_string(),
                        residual: residual.to_string(),
                    },
                    LoopFailure::Twist { u, residual } => LoopFailureJson::Twist {
                        u: u.to_string(),
                        residual: residual.to_string(),
                    },
                }),
            ),
        };
        Self {
            k,
            power,
            phi,
            window,
            verdict,
            equations,
            failure,
        }
    }
}

pub fn loop_text(k: u32, power: u32, phi: &str, window: u32, v: &LoopVerdict) -> String {
    let gamma = format!("γ = α̌^{power} ⊗ ({phi})");
    match v {
        LoopVerdict::Confirmed { equations } => format!(
            "confirmed: {gamma} is a centroid element of ad_{k} on degrees |m| + |n| within window {window} ({equations} equations)\n"
        ),
        LoopVerdict::Rejected(LoopFailure::Bracket { u, v, residual }) => format!(
            "rejected: {gamma} fails γ([u,v]) = [α̌^{}(u), γ(v)]\n  u        = {u}\n  v        = {v}\n  residual = {residual}\n",
            k + 1
        ),
        LoopVerdict::Rejected(LoopFailure::Twist { u, residual }) => format!(
            "rejected: {gamma} fails γ(α̌(u)) = α̌(γ(u))\n  u        = {u}\n  residual = {residual}\n"
        ),
    }
}

/// Matrix rows for human display.
pub fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<Vec<String>> = emit_matrix(m);
    table(&rows)
}
