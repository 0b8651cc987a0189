//! Acceptance suite. Runs without the libtest harness so that one
//! `criterion N: PASS|FAIL` line per criterion is always printed; the
//! process exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use twistalg_core::bialg::{
    ad3_apply, alt, check_cocycle, check_cojacobi, cobracket_from_r, cyb, etingof_schiffmann, gamma_squared, Bivector,
};
use twistalg_core::cohomology::{ce_differential, cohomology_dim, GModule, ModuleKind, MAX_DEGREE};
use twistalg_core::decomp::{brackets_within, cartan_form, is_nilpotent, iwasawa, matrix_to_abstract};
use twistalg_core::deform::{
    check_associativity, moyal_twist, poisson_compatibility, twist_product, weyl_moyal_parameter,
    weyl_moyal_reference, HbarSeries, Poly,
};
use twistalg_core::hopf::{
    check_hopf_axioms, check_module_algebra, deform_hopf, function_algebra, twist_back, twist_module_algebra,
};
use twistalg_core::verdict::{algebra_verdict, euler_characteristic_surface, surface_verdict, Existence};
use twistalg_core::{catalog, LieAlgebra, Matrix, Scalar, Tensor3};

const SEED: u64 = 0x7415_7a19;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn criterion_1() -> Outcome {
    let alg = catalog::two_dim();
    let r = Bivector::wedge(2, 0, 1, s(1));
    let gamma = cobracket_from_r(&alg, &r).map_err(|e| e.to_string())?;
    ensure(gamma.components()[0].is_zero(), || "γ(X) ≠ 0".into())?;
    let minus_xy = Bivector::wedge(2, 0, 1, s(-1)).into_matrix();
    ensure(gamma.components()[1] == minus_xy, || format!("γ(Y) = {:?}", gamma.components()[1]))?;
    ensure(check_cocycle(&alg, &gamma).map_err(|e| e.to_string())?.passed, || "cocycle failed".into())?;
    ensure(check_cojacobi(&gamma).passed, || "coJacobi failed".into())?;
    ensure(cyb(&alg, r.matrix()).map_err(|e| e.to_string())?.is_zero(), || "CYB(r) ≠ 0".into())?;
    let es = etingof_schiffmann(&alg, &r).map_err(|e| e.to_string())?;
    ensure(es.subspace.dim() == 2 && es.restricted_r.rank() == 2, || "h_r is not g with rank 2".into())?;
    let killing = Matrix::new(2, 2, vec![s(0), s(0), s(0), s(1)]);
    ensure(alg.killing_form().matrix == killing, || format!("Killing = {:?}", alg.killing_form().matrix))?;
    ensure(!alg.is_semisimple(), || "2D algebra reported semisimple".into())?;
    let v = algebra_verdict(&alg, r.matrix()).map_err(|e| e.to_string())?;
    ensure(!v.has_inconsistency_flag(), || "verdict raised the contradiction flag".into())?;
    Ok("cobracket, cocycle, coJacobi, CYB, h_r, Killing, verdict".into())
}

fn random_antisymmetric(rng: &mut StdRng, n: usize) -> Bivector {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let c = Scalar::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            m[(i, j)] = c.clone();
            m[(j, i)] = -c;
        }
    }
    Bivector::new(m).expect("antisymmetric by construction")
}

fn criterion_2(rng: &mut StdRng) -> Outcome {
    const SAMPLES: usize = 200;
    for (name, alg) in catalog::abstract_algebras() {
        let n = alg.dim();
        for sample in 0..SAMPLES {
            let r = random_antisymmetric(rng, n);
            let gamma = cobracket_from_r(&alg, &r).map_err(|e| e.to_string())?;
            let t = cyb(&alg, r.matrix()).map_err(|e| e.to_string())?;
            for i in 0..n {
                let lhs = alt(&gamma_squared(&gamma, i));
                let ad = ad3_apply(&alg, &alg.basis_vector(i), &t).map_err(|e| e.to_string())?;
                let rhs = Tensor3::from_fn(ad.dims(), |p, q, r| -&ad[(p, q, r)]);
                ensure(lhs == rhs, || format!("{name}, sample {sample}, x = e{i}, r = {:?}", r.matrix()))?;
            }
        }
    }
    Ok(format!("{SAMPLES} random r on each of 5 algebras"))
}

fn criterion_3() -> Outcome {
    let expected = [("two_dim", false, 1), ("heisenberg", false, 3), ("sl2", true, 0), ("so3", true, 0)];
    let algs = catalog::abstract_algebras();
    let find = |name: &str| -> &LieAlgebra { &algs.iter().find(|(n, _)| *n == name).expect("catalog name").1 };
    for (name, semisimple, radical) in expected {
        let alg = find(name);
        ensure(alg.is_semisimple() == semisimple, || format!("{name}: is_semisimple = {}", !semisimple))?;
        let got = alg.killing_radical().dim();
        ensure(got == radical, || format!("{name}: radical dim {got}, expected {radical}"))?;
    }
    for n in 1..=5 {
        let alg = LieAlgebra::abelian(n);
        ensure(!alg.is_semisimple(), || format!("abelian {n} reported semisimple"))?;
        ensure(alg.killing_radical().dim() == n, || format!("abelian {n}: radical dim ≠ {n}"))?;
    }
    Ok("sl2, so3 semisimple; radicals 1, 3, n for 2D, Heisenberg, abelian".into())
}

fn criterion_4() -> Outcome {
    let sl2 = catalog::sl2();
    for kind in [ModuleKind::Trivial, ModuleKind::Adjoint] {
        let module = GModule::new(&sl2, kind);
        for degree in [1, 2] {
            let h = cohomology_dim(&sl2, &module, degree).map_err(|e| e.to_string())?;
            ensure(h == 0, || format!("H^{degree}(sl2, {kind:?}) has dim {h}"))?;
        }
    }
    let mut pairs = 0;
    for (name, alg) in catalog::abstract_algebras() {
        for kind in [ModuleKind::Trivial, ModuleKind::Adjoint, ModuleKind::Adjoint2] {
            let module = GModule::new(&alg, kind);
            for n in 0..MAX_DEGREE {
                let d0 = ce_differential(&alg, &module, n).map_err(|e| e.to_string())?;
                let d1 = ce_differential(&alg, &module, n + 1).map_err(|e| e.to_string())?;
                ensure((&d1 * &d0).is_zero(), || format!("δ² ≠ 0 on {name}, {kind:?}, degree {n}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("H^1 = H^2 = 0 for sl2; δ² = 0 on {pairs} (algebra, module, degree) cases"))
}

fn criterion_5() -> Outcome {
    let m = catalog::so13();
    let alg = matrix_to_abstract(&m).map_err(|e| e.to_string())?;
    let iw = iwasawa(&m).map_err(|e| e.to_string())?;
    ensure(iw.dims() == (3, 1, 2), || format!("dims (k, a, n) = {:?}", iw.dims()))?;
    ensure(brackets_within(&alg, &iw.k, &iw.k, &iw.k), || "[k,k] ⊄ k".into())?;
    ensure(brackets_within(&alg, &iw.k, &iw.p, &iw.p), || "[k,p] ⊄ p".into())?;
    ensure(brackets_within(&alg, &iw.p, &iw.p, &iw.k), || "[p,p] ⊄ k".into())?;
    ensure(brackets_within(&alg, &iw.a, &iw.n, &iw.n), || "[a,n] ⊄ n".into())?;
    ensure(is_nilpotent(&alg, &iw.n), || "n is not nilpotent".into())?;
    let form = cartan_form(&m).map_err(|e| e.to_string())?;
    ensure(form.positive_definite, || format!("B_Θ minors {:?}", form.minors))?;
    Ok("dims (3, 1, 2), Cartan relations, [a,n] ⊆ n, n nilpotent, B_Θ > 0".into())
}

fn criterion_6() -> Outcome {
    for (name, h, table) in [
        ("klein", catalog::klein(), catalog::klein_table()),
        ("d4", catalog::d4(), catalog::d4_table()),
    ] {
        let t = catalog::klein_twist(&h);
        let deformed = deform_hopf(&h, &t).map_err(|e| e.to_string())?;
        let report = check_hopf_axioms(&deformed);
        ensure(report.passed(), || format!("{name}: deformed Hopf axioms fail: {:?}", report.failing().collect::<Vec<_>>()))?;
        let back = twist_back(&h, &t).map_err(|e| e.to_string())?;
        ensure(back == h, || format!("{name}: twisting back does not reproduce the original tensors"))?;
        let funcs = function_algebra(&table).map_err(|e| e.to_string())?;
        let twisted = twist_module_algebra(&h, &t, &funcs).map_err(|e| e.to_string())?;
        let report = check_module_algebra(&deformed, &twisted).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{name}: twisted module algebra fails: {:?}", report.failing().collect::<Vec<_>>()))?;
    }
    Ok("klein and d4: deformed axioms, exact twist back, twisted module algebra".into())
}

fn random_monomial(rng: &mut StdRng) -> Poly {
    let total = rng.gen_range(0..=3u32);
    let a = rng.gen_range(0..=total);
    Poly::monomial((a, total - a), s(1))
}

fn random_poly(rng: &mut StdRng) -> Poly {
    (0..rng.gen_range(1..=3)).fold(Poly::default(), |acc, _| {
        let c = Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        &acc + &random_monomial(rng).scale(&c)
    })
}

fn criterion_7(rng: &mut StdRng) -> Outcome {
    const ORDER: usize = 4;
    let t = moyal_twist(&Scalar::i(), ORDER).map_err(|e| e.to_string())?;
    for k in 0..100 {
        let (f, g, h) = (random_monomial(rng), random_monomial(rng), random_monomial(rng));
        let report = check_associativity(&t, &f, &g, &h);
        ensure(report.passed, || {
            format!("triple {k} ({f}, {g}, {h}) fails at order {:?}", report.lowest_failing_order)
        })?;
    }
    let (x1, x2) = (Poly::x1(), Poly::x2());
    let commutator = twist_product(&t, &x1, &x2).sub(&twist_product(&t, &x2, &x1));
    let expected = HbarSeries::new(ORDER, vec![Poly::zero(), Poly::constant(Scalar::i() * s(2))]);
    ensure(commutator == expected, || format!("x1⋆x2 − x2⋆x1 = {commutator}"))?;
    let weyl = moyal_twist(&weyl_moyal_parameter(), ORDER).map_err(|e| e.to_string())?;
    for k in 0..100 {
        let (f, g) = (random_poly(rng), random_poly(rng));
        let report = poisson_compatibility(&t, &f, &g).map_err(|e| e.to_string())?;
        ensure(report.passed, || format!("pair {k} ({f}, {g}): C₁ antisymmetrization ≠ m(r▷·)"))?;
        let lhs = twist_product(&weyl, &f, &g);
        ensure(lhs == weyl_moyal_reference(&f, &g, ORDER), || format!("pair {k} ({f}, {g}) differs from Weyl–Moyal"))?;
    }
    Ok("associative mod ħ^5 on 100 triples, [x1,x2]⋆ = 2iħ, Poisson and Weyl–Moyal on 100 pairs".into())
}

fn criterion_8() -> Outcome {
    for genus in 0..=5u64 {
        let chi = euler_characteristic_surface(genus);
        ensure(chi == 2 - 2 * i128::from(genus), || format!("χ(genus {genus}) = {chi}"))?;
        let v = surface_verdict(genus).map_err(|e| e.to_string())?;
        let expected = if genus == 1 { Existence::Yes } else { Existence::No };
        ensure(v.exists_twist_star == expected, || format!("genus {genus}: {:?}", v.exists_twist_star))?;
        ensure(v.witness.is_some() == (genus == 1), || format!("genus {genus}: witness presence wrong"))?;
    }
    Ok("genus 0..5 verdicts and χ = 2 − 2g".into())
}

fn criterion_9() -> Outcome {
    let catalog = catalog::triangular_catalog();
    let mut violations = Vec::new();
    for (name, alg, r) in &catalog {
        let es = etingof_schiffmann(alg, r).map_err(|e| format!("{name}: {e}"))?;
        let h = alg.restrict(&es.subspace).map_err(|e| format!("{name}: {e}"))?;
        if h.is_semisimple() {
            violations.push(format!("{name}: h_r of dim {} has Killing form {:?}", h.dim(), h.killing_form().matrix));
        }
    }
    ensure(violations.is_empty(), || violations.join("; "))?;
    Ok(format!("{} triangular r-matrices, none with semisimple h_r", catalog.len()))
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(SEED);
    let criteria: Vec<(u32, Duration, Box<dyn FnOnce(&mut StdRng) -> Outcome>)> = vec![
        (1, Duration::from_secs(1), Box::new(|_| criterion_1())),
        (2, Duration::from_secs(30), Box::new(criterion_2)),
        (3, Duration::from_secs(1), Box::new(|_| criterion_3())),
        (4, Duration::from_secs(30), Box::new(|_| criterion_4())),
        (5, Duration::from_secs(1), Box::new(|_| criterion_5())),
        (6, Duration::from_secs(1), Box::new(|_| criterion_6())),
        (7, Duration::from_secs(30), Box::new(criterion_7)),
        (8, Duration::from_secs(10), Box::new(|_| criterion_8())),
        (9, Duration::from_secs(10), Box::new(|_| criterion_9())),
    ];
    let mut failed = 0;
    for (n, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run(&mut rng);
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            ensure(elapsed <= budget, || format!("took {elapsed:.2?}, budget {budget:?}")).map(|_| detail)
        });
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS ({detail}; {elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({why}; {elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
