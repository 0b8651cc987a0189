//! Verb handlers. Each returns the text report, the JSON document and
//! whether every check passed.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use twistalg_core::bialg::{
    check_cocycle, check_cojacobi, classify_r, cobracket_from_r, cyb, dual_bracket_unchecked, etingof_schiffmann,
    pushforward_r, Bivector, Cobracket,
};
use twistalg_core::cohomology::{ce_differential, cohomology_dim, GModule, ModuleKind, MAX_DEGREE};
use twistalg_core::decomp::{
    brackets_within, cartan_decomposition, cartan_form, is_nilpotent, iwasawa, matrix_to_abstract, MatrixLieAlgebra,
};
use twistalg_core::deform::{
    check_associativity, extract_rmatrix, moyal_twist, parse_poly, poisson_compatibility, twist_product, Poly,
    TwistSeries,
};
use twistalg_core::hopf::{
    check_hopf_axioms, check_inverse_cocycle, check_module_algebra, deform_hopf, is_twist, twist_back,
    twist_module_algebra, HopfAlgebra, TwistElement,
};
use twistalg_core::io::{
    from_json, CobracketDoc, HopfDoc, LieDoc, LinearMapDoc, MatrixAlgebraDoc, ModuleAlgebraDoc, RMatrixDoc, TwistDoc,
};
use twistalg_core::verdict::{algebra_verdict, euler_characteristic_surface, surface_verdict};
use twistalg_core::{LieAlgebra, Matrix, Scalar, Subspace};

use crate::render;
use crate::{Cli, Verb};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            Self::Input(_) => 2,
            Self::CheckFailed(_) => 1,
        }
    }
}

fn core_error(context: &str, e: twistalg_core::Error) -> CliError {
    let msg = if context.is_empty() {
        e.to_string()
    } else {
        format!("{context}: {e}")
    };
    if e.is_input_error() {
        CliError::Input(msg)
    } else {
        CliError::CheckFailed(msg)
    }
}

trait Context<T> {
    fn ctx(self, context: &str) -> Result<T, CliError>;
}

impl<T> Context<T> for twistalg_core::Result<T> {
    fn ctx(self, context: &str) -> Result<T, CliError> {
        self.map_err(|e| core_error(context, e))
    }
}

pub struct Output {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    from_json(&read(path)?).ctx(&path.display().to_string())
}

fn files<'a>(cli: &'a Cli, names: &[&str]) -> Result<&'a [PathBuf], CliError> {
    if cli.files.len() != names.len() {
        return Err(CliError::Input(format!(
            "expected {} input file(s) <{}>, got {}",
            names.len(),
            names.join("> <"),
            cli.files.len()
        )));
    }
    Ok(&cli.files)
}

fn exprs<'a>(cli: &'a Cli, count: usize) -> Result<Vec<Poly>, CliError> {
    if cli.exprs.len() != count {
        return Err(CliError::Input(format!(
            "expected {count} --expr polynomial(s), got {}",
            cli.exprs.len()
        )));
    }
    cli.exprs
        .iter()
        .map(|s| parse_poly(s).ctx("--expr"))
        .collect::<Result<Vec<_>, _>>()
}

fn lie(path: &Path) -> Result<LieAlgebra, CliError> {
    load::<LieDoc>(path)?.to_algebra().ctx(&path.display().to_string())
}

fn r_matrix(path: &Path, alg: &LieAlgebra) -> Result<Matrix, CliError> {
    let r = load::<RMatrixDoc>(path)?.to_matrix().ctx(&path.display().to_string())?;
    if r.rows() != alg.dim() {
        return Err(CliError::Input(format!(
            "{}: r-matrix has dimension {}, algebra has dimension {}",
            path.display(),
            r.rows(),
            alg.dim()
        )));
    }
    Ok(r)
}

fn bivector(path: &Path, alg: &LieAlgebra) -> Result<Bivector, CliError> {
    Bivector::new(r_matrix(path, alg)?).ctx(&path.display().to_string())
}

/// A cobracket document, or an r-matrix document whose coboundary is used.
fn cobracket(path: &Path, alg: &LieAlgebra) -> Result<Cobracket, CliError> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: malformed document: {e}", path.display())))?;
    let gamma = if value.get("components").is_some() {
        from_json::<CobracketDoc>(&text)
            .and_then(|d| d.to_cobracket())
            .ctx(&path.display().to_string())?
    } else {
        cobracket_from_r(alg, &bivector(path, alg)?).ctx("cobracket")?
    };
    if gamma.dim() != alg.dim() {
        return Err(CliError::Input(format!(
            "{}: cobracket has dimension {}, algebra has dimension {}",
            path.display(),
            gamma.dim(),
            alg.dim()
        )));
    }
    Ok(gamma)
}

fn matrix_algebra(path: &Path) -> Result<MatrixLieAlgebra, CliError> {
    load::<MatrixAlgebraDoc>(path)?
        .to_algebra()
        .ctx(&path.display().to_string())
}

fn hopf(path: &Path) -> Result<HopfAlgebra, CliError> {
    load::<HopfDoc>(path)?.to_hopf().ctx(&path.display().to_string())
}

fn twist(path: &Path, h: &HopfAlgebra) -> Result<TwistElement, CliError> {
    load::<TwistDoc>(path)?.to_twist(h).ctx(&path.display().to_string())
}

fn coeff(cli: &Cli) -> Result<Scalar, CliError> {
    cli.coeff
        .parse::<Scalar>()
        .map_err(|e| CliError::Input(format!("--coeff: {e}")))
}

fn moyal(cli: &Cli) -> Result<TwistSeries, CliError> {
    moyal_twist(&coeff(cli)?, cli.order).ctx("--order")
}

fn genus(cli: &Cli) -> Result<u64, CliError> {
    cli.genus
        .ok_or_else(|| CliError::Input("--genus is required".into()))
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn coords(s: &Subspace) -> Vec<Vec<String>> {
    s.basis()
        .iter()
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .collect()
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match cli.verb {
        Verb::CheckJacobi => check_jacobi_cmd(cli),
        Verb::Killing => killing_cmd(cli),
        Verb::Semisimple => semisimple_cmd(cli),
        Verb::Cohomology => cohomology_cmd(cli),
        Verb::Cobracket => cobracket_cmd(cli),
        Verb::Cocycle => cocycle_cmd(cli),
        Verb::Cojacobi => cojacobi_cmd(cli),
        Verb::Dual => dual_cmd(cli),
        Verb::Cybe => cybe_cmd(cli),
        Verb::Classify => classify_cmd(cli),
        Verb::EsSubalgebra => es_cmd(cli),
        Verb::Pushforward => pushforward_cmd(cli),
        Verb::Cartan => cartan_cmd(cli),
        Verb::Iwasawa => iwasawa_cmd(cli),
        Verb::HopfCheck => hopf_check_cmd(cli),
        Verb::TwistCheck => twist_check_cmd(cli),
        Verb::TwistDeform => twist_deform_cmd(cli),
        Verb::TwistModule => twist_module_cmd(cli),
        Verb::Moyal => moyal_cmd(cli),
        Verb::Star => star_cmd(cli),
        Verb::Assoc => assoc_cmd(cli),
        Verb::ExtractR => extract_r_cmd(cli),
        Verb::PoissonCheck => poisson_cmd(cli),
        Verb::Euler => euler_cmd(cli),
        Verb::Surface => surface_cmd(cli),
        Verb::Obstruct => obstruct_cmd(cli),
    }
}

fn check_jacobi_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json"])?;
    let alg = load::<LieDoc>(&f[0])?
        .to_algebra_unchecked()
        .ctx(&f[0].display().to_string())?;
    let report = alg.check_jacobi();
    let mut text = format!("jacobi: {}\n", pass(report.passed));
    let names = alg.names();
    for v in &report.violations {
        text += &format!(
            "  [{a},[{b},{c}]] + [{b},[{c},{a}]] + [{c},[{a},{b}]] has coefficient {} on {}\n",
            v.value,
            names[v.l],
            a = names[v.i],
            b = names[v.j],
            c = names[v.k],
        );
    }
    Ok(Output {
        ok: report.passed,
        text,
        json: to_value(&report),
    })
}

fn killing_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json"])?;
    let alg = lie(&f[0])?;
    let kappa = alg.killing_form();
    let det = kappa.matrix.determinant();
    let radical = alg.killing_radical().dim();
    Ok(Output {
        ok: true,
        text: format!(
            "killing form: {}\ndeterminant: {det}\nradical dimension: {radical}\n",
            render::matrix(&kappa.matrix)
        ),
        json: json!({
            "matrix": render::rows(&kappa.matrix),
            "determinant": det,
            "radical_dim": radical,
            "nondegenerate": kappa.is_nondegenerate(),
        }),
    })
}

fn semisimple_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json"])?;
    let alg = lie(&f[0])?;
    let semisimple = alg.is_semisimple();
    let radical = alg.killing_radical().dim();
    Ok(Output {
        ok: true,
        text: format!("semisimple: {semisimple} (Killing radical dimension {radical})\n"),
        json: json!({ "semisimple": semisimple, "radical_dim": radical }),
    })
}

fn cohomology_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json"])?;
    let alg = lie(&f[0])?;
    let kind: ModuleKind = cli.module.parse().map_err(CliError::Input)?;
    let module = GModule::new(&alg, kind);
    let degrees: Vec<usize> = match cli.degree {
        Some(n) => vec![n],
        None => (0..=MAX_DEGREE).collect(),
    };
    let mut text = String::new();
    let mut dims = Vec::new();
    let mut all_ok = true;
    let mut squares = Vec::new();
    for &n in &degrees {
        let d = cohomology_dim(&alg, &module, n).ctx("cohomology")?;
        text += &format!("H^{n}(g, {}) = {d}\n", cli.module);
        dims.push(json!({ "degree": n, "dim": d }));
        if n < MAX_DEGREE {
            let dn = ce_differential(&alg, &module, n).ctx("differential")?;
            let dn1 = ce_differential(&alg, &module, n + 1).ctx("differential")?;
            let zero = (&dn1 * &dn).is_zero();
            all_ok &= zero;
            text += &format!("δ∘δ = 0 on C^{n}: {}\n", pass(zero));
            squares.push(json!({ "degree": n, "zero": zero }));
        }
    }
    Ok(Output {
        ok: all_ok,
        text,
        json: json!({ "module": cli.module, "dims": dims, "d_squared": squares }),
    })
}

fn cobracket_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json", "r.json"])?;
    let alg = lie(&f[0])?;
    let gamma = cobracket_from_r(&alg, &bivector(&f[1], &alg)?).ctx("cobracket")?;
    let names = alg.names();
    let text = gamma
        .components()
        .iter()
        .enumerate()
        .map(|(i, m)| format!("γ({}) = {}\n", names[i], render::two_tensor(names, m)))
        .collect();
    Ok(Output {
        ok: true,
        text,
        json: to_value(&CobracketDoc::from_cobracket(&gamma)),
    })
}

fn cocycle_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json", "r-or-cobracket.json"])?;
    let alg = lie(&f[0])?;
    let report = check_cocycle(&alg, &cobracket(&f[1], &alg)?).ctx("cocycle")?;
    Ok(Output {
        ok: report.passed,
        text: format!("{report}\n"),
        json: to_value(&report),
    })
}

fn cojacobi_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json", "r-or-cobracket.json"])?;
    let alg = lie(&f[0])?;
    let report = check_cojacobi(&cobracket(&f[1], &alg)?);
    Ok(Output {
        ok: report.passed,
        text: format!("{report}\n"),
        json: to_value(&report),
    })
}

fn dual_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json", "r-or-cobracket.json"])?;
    let alg = lie(&f[0])?;
    let dual = dual_bracket_unchecked(&alg, &cobracket(&f[1], &alg)?).ctx("dual")?;
    let report = dual.check_jacobi();
    let names = dual.names();
    let mut text = String::new();
    for i in 0..dual.dim() {
        for j in i + 1..dual.dim() {
            let v = dual.bracket(&dual.basis_vector(i), &dual.basis_vector(j));
            text += &format!("[{}, {}] = {}\n", names[i], names[j], render::vector(names, &v));
        }
    }
    text += &format!("jacobi on the dual: {}\n", pass(report.passed));
    Ok(Output {
        ok: report.passed,
        text,
        json: to_value(&LieDoc::from_algebra(&dual)),
    })
}

fn cybe_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json", "r.json"])?;
    let alg = lie(&f[0])?;
    let t = cyb(&alg, &r_matrix(&f[1], &alg)?).ctx("cyb")?;
    let support = t.support();
    let names = alg.names();
    let text = if support.is_empty() {
        "CYB(r) = 0\n".to_string()
    } else {
        let mut s = format!("CYB(r) ≠ 0: {} nonzero components\n", support.len());
        for &(a, b, c) in &support {
            s += &format!("  {}⊗{}⊗{}: {}\n", names[a], names[b], names[c], t[(a, b, c)]);
        }
        s
    };
    let components: Vec<Value> = support
        .iter()
        .map(|&(a, b, c)| json!({ "index": [a, b, c], "value": t[(a, b, c)] }))
        .collect();
    Ok(Output {
        ok: support.is_empty(),
        text,
        json: json!({ "zero": support.is_empty(), "components": components }),
    })
}

fn classify_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json", "r.json"])?;
    let alg = lie(&f[0])?;
    let c = classify_r(&alg, &r_matrix(&f[1], &alg)?).ctx("classify")?;
    let text = format!(
        "class: {}\nantisymmetric: {}\nCYB(r) = 0: {}\nr + σ(r) invariant: {}\nCYB(r) invariant: {}\n",
        c.class, c.antisymmetric, c.cyb_zero, c.symmetric_part_invariant, c.cyb_invariant
    );
    Ok(Output {
        ok: true,
        text,
        json: json!({
            "class": c.class,
            "antisymmetric": c.antisymmetric,
            "cyb_zero": c.cyb_zero,
            "symmetric_part_invariant": c.symmetric_part_invariant,
            "cyb_invariant": c.cyb_invariant,
        }),
    })
}

fn es_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json", "r.json"])?;
    let alg = lie(&f[0])?;
    let es = etingof_schiffmann(&alg, &bivector(&f[1], &alg)?).ctx("h_r")?;
    let h = alg.restrict(&es.subspace).ctx("h_r")?;
    let semisimple = es.subspace.dim() > 0 && h.is_semisimple();
    let names = alg.names();
    let mut text = format!("dim h_r = {}\n", es.subspace.dim());
    for (p, b) in es.subspace.basis().iter().enumerate() {
        text += &format!("  b{p} = {}\n", render::vector(names, b));
    }
    text += &format!(
        "r on h_r: {} (rank {})\nh_r semisimple: {semisimple}\n",
        render::matrix(&es.restricted_r),
        es.restricted_r.rank()
    );
    Ok(Output {
        ok: !semisimple,
        text,
        json: json!({
            "dim": es.subspace.dim(),
            "basis": coords(&es.subspace),
            "restricted_r": render::rows(&es.restricted_r),
            "semisimple": semisimple,
        }),
    })
}

fn pushforward_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["source.json", "target.json", "phi.json", "r.json"])?;
    let source = lie(&f[0])?;
    let target = lie(&f[1])?;
    let phi = load::<LinearMapDoc>(&f[2])?
        .to_matrix()
        .ctx(&f[2].display().to_string())?;
    if phi.rows() != target.dim() || phi.cols() != source.dim() {
        return Err(CliError::Input(format!(
            "{}: map is {}×{}, expected {}×{}",
            f[2].display(),
            phi.rows(),
            phi.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let r = bivector(&f[3], &source)?;
    let pushed = pushforward_r(&source, &target, &phi, &r).ctx("pushforward")?;
    let cybe_zero = cyb(&target, pushed.matrix()).ctx("cyb")?.is_zero();
    Ok(Output {
        ok: true,
        text: format!(
            "(φ⊗φ)r = {}\nCYB of image = 0: {cybe_zero}\n",
            render::two_tensor(target.names(), pushed.matrix())
        ),
        json: to_value(&RMatrixDoc::from_matrix(pushed.matrix())),
    })
}

fn matrices_json(m: &MatrixLieAlgebra, s: &Subspace) -> Vec<Vec<Vec<String>>> {
    m.matrices(s).iter().map(render::rows).collect()
}

fn matrices_text(m: &MatrixLieAlgebra, s: &Subspace) -> String {
    m.matrices(s)
        .iter()
        .map(|x| format!("  {}\n", render::matrix(x)))
        .collect()
}

fn cartan_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["matrices.json"])?;
    let m = matrix_algebra(&f[0])?;
    let c = cartan_decomposition(&m).ctx("cartan")?;
    let text = format!(
        "Θ = {}\ndim k = {}\n{}dim p = {}\n{}",
        render::matrix(&c.theta),
        c.k.dim(),
        matrices_text(&m, &c.k),
        c.p.dim(),
        matrices_text(&m, &c.p)
    );
    Ok(Output {
        ok: true,
        text,
        json: json!({
            "theta": render::rows(&c.theta),
            "k": matrices_json(&m, &c.k),
            "p": matrices_json(&m, &c.p),
        }),
    })
}

fn iwasawa_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["matrices.json"])?;
    let m = matrix_algebra(&f[0])?;
    let alg = matrix_to_abstract(&m).ctx("iwasawa")?;
    let iw = iwasawa(&m).ctx("iwasawa")?;
    let form = cartan_form(&m).ctx("iwasawa")?;
    let (k, a, n) = iw.dims();
    let checks = [
        ("[k,k] ⊆ k", brackets_within(&alg, &iw.k, &iw.k, &iw.k)),
        ("[k,p] ⊆ p", brackets_within(&alg, &iw.k, &iw.p, &iw.p)),
        ("[p,p] ⊆ k", brackets_within(&alg, &iw.p, &iw.p, &iw.k)),
        ("[a,n] ⊆ n", brackets_within(&alg, &iw.a, &iw.n, &iw.n)),
        ("n nilpotent", is_nilpotent(&alg, &iw.n)),
        ("B_Θ positive definite", form.positive_definite),
    ];
    let ok = checks.iter().all(|(_, v)| *v);
    let mut text = format!("dims (k, a, n) = ({k}, {a}, {n})\na:\n{}n:\n{}", matrices_text(&m, &iw.a), matrices_text(&m, &iw.n));
    for root in &iw.restricted_roots {
        let values: Vec<String> = root.functional.iter().map(|x| x.to_string()).collect();
        text += &format!(
            "restricted root [{}] multiplicity {}{}\n",
            values.join(", "),
            root.multiplicity,
            if root.positive { " (positive)" } else { "" }
        );
    }
    for (name, v) in &checks {
        text += &format!("{name}: {}\n", pass(*v));
    }
    let check_json: Vec<Value> = checks.iter().map(|(name, v)| json!({ "name": name, "passed": v })).collect();
    Ok(Output {
        ok,
        text,
        json: json!({
            "dims": { "k": k, "a": a, "n": n },
            "k": matrices_json(&m, &iw.k),
            "a": matrices_json(&m, &iw.a),
            "n": matrices_json(&m, &iw.n),
            "restricted_roots": iw.restricted_roots,
            "cartan_form": render::rows(&form.matrix),
            "checks": check_json,
        }),
    })
}

fn hopf_check_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["hopf.json"])?;
    let report = check_hopf_axioms(&hopf(&f[0])?);
    Ok(Output {
        ok: report.passed(),
        text: render::axiom_report(&report),
        json: to_value(&report),
    })
}

fn twist_check_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["hopf.json", "twist.json"])?;
    let h = hopf(&f[0])?;
    let t = twist(&f[1], &h)?;
    let mut report = is_twist(&h, &t);
    report.checks.push(check_inverse_cocycle(&h, &t));
    Ok(Output {
        ok: report.passed(),
        text: render::axiom_report(&report),
        json: to_value(&report),
    })
}

fn twist_deform_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["hopf.json", "twist.json"])?;
    let h = hopf(&f[0])?;
    let t = twist(&f[1], &h)?;
    let deformed = deform_hopf(&h, &t).ctx("deform")?;
    let report = check_hopf_axioms(&deformed);
    let back = twist_back(&h, &t).ctx("twist back")? == h;
    let mut text = format!("deformed Hopf algebra (dim {}):\n", deformed.dim());
    text += &render::axiom_report(&report);
    text += &format!("twisting back by F⁻¹ reproduces the original: {}\n", pass(back));
    text += &format!("coproduct changed: {}\n", deformed.coprod() != h.coprod());
    Ok(Output {
        ok: report.passed() && back,
        text,
        json: to_value(&HopfDoc::from_hopf(&deformed)),
    })
}

fn twist_module_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["hopf.json", "twist.json", "module.json"])?;
    let h = hopf(&f[0])?;
    let t = twist(&f[1], &h)?;
    let m = load::<ModuleAlgebraDoc>(&f[2])?
        .to_module(h.dim())
        .ctx(&f[2].display().to_string())?;
    let twisted = twist_module_algebra(&h, &t, &m).ctx("twisted module algebra")?;
    let deformed = deform_hopf(&h, &t).ctx("deform")?;
    let report = check_module_algebra(&deformed, &twisted).ctx("module algebra")?;
    let mut text = "twisted product over the deformed Hopf algebra:\n".to_string();
    text += &render::axiom_report(&report);
    text += &format!(
        "commutative before: {}, after: {}\n",
        m.commutators().is_empty(),
        twisted.commutators().is_empty()
    );
    Ok(Output {
        ok: report.passed(),
        text,
        json: to_value(&ModuleAlgebraDoc::from_module(&twisted)),
    })
}

fn moyal_cmd(cli: &Cli) -> Result<Output, CliError> {
    let t = moyal(cli)?;
    let mut text = String::new();
    for (r, op) in t.f().coeffs().iter().enumerate() {
        text += &format!("F_{r} = {op}\n");
    }
    for (r, op) in t.finv().coeffs().iter().enumerate() {
        text += &format!("F⁻¹_{r} = {op}\n");
    }
    Ok(Output {
        ok: true,
        text,
        json: to_value(&t),
    })
}

fn star_cmd(cli: &Cli) -> Result<Output, CliError> {
    let t = moyal(cli)?;
    let e = exprs(cli, 2)?;
    let prod = twist_product(&t, &e[0], &e[1]);
    Ok(Output {
        ok: true,
        text: format!("({}) ⋆ ({}) = {prod}\n", e[0], e[1]),
        json: json!({ "f": e[0], "g": e[1], "product": prod }),
    })
}

fn assoc_cmd(cli: &Cli) -> Result<Output, CliError> {
    let t = moyal(cli)?;
    let e = exprs(cli, 3)?;
    let report = check_associativity(&t, &e[0], &e[1], &e[2]);
    let text = match report.lowest_failing_order {
        None => format!("associative mod h^{}: pass\n", report.order + 1),
        Some(k) => format!(
            "associative mod h^{}: FAIL (lowest failing order {k})\nresidual: {}\n",
            report.order + 1,
            report.residual
        ),
    };
    Ok(Output {
        ok: report.passed,
        text,
        json: to_value(&report),
    })
}

fn extract_r_cmd(cli: &Cli) -> Result<Output, CliError> {
    let t = moyal(cli)?;
    let r = extract_rmatrix(&t).ctx("extract-r")?;
    let antisymmetric = r.braid() == r.scale(&Scalar::from_int(-1));
    Ok(Output {
        ok: antisymmetric,
        text: format!("r = σ(F₁) − F₁ = {r}\nantisymmetric: {}\n", pass(antisymmetric)),
        json: json!({ "r": r, "antisymmetric": antisymmetric }),
    })
}

fn poisson_cmd(cli: &Cli) -> Result<Output, CliError> {
    let t = moyal(cli)?;
    let e = exprs(cli, 2)?;
    let report = poisson_compatibility(&t, &e[0], &e[1]).ctx("poisson-check")?;
    Ok(Output {
        ok: report.passed,
        text: format!(
            "C₁(f,g) − C₁(g,f) = {}\nm(r▷(f⊗g)) = {}\ncompatible: {}\n",
            report.antisymmetrized,
            report.from_r,
            pass(report.passed)
        ),
        json: to_value(&report),
    })
}

fn euler_cmd(cli: &Cli) -> Result<Output, CliError> {
    let g = genus(cli)?;
    let chi = euler_characteristic_surface(g);
    Ok(Output {
        ok: true,
        text: format!("χ = 2 − 2·{g} = {chi}\n"),
        json: json!({ "genus": g, "euler_characteristic": chi as i64 }),
    })
}

fn surface_cmd(cli: &Cli) -> Result<Output, CliError> {
    let v = surface_verdict(genus(cli)?).ctx("surface")?;
    Ok(Output {
        ok: true,
        text: format!("{v}\n"),
        json: to_value(&v),
    })
}

fn obstruct_cmd(cli: &Cli) -> Result<Output, CliError> {
    let f = files(cli, &["lie.json", "r.json"])?;
    let alg = lie(&f[0])?;
    let v = algebra_verdict(&alg, &r_matrix(&f[1], &alg)?).ctx("obstruct")?;
    Ok(Output {
        ok: v.flags.is_empty(),
        text: format!("{v}\n"),
        json: to_value(&v),
    })
}
