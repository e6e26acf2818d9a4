//! Acceptance gate: one PASS/FAIL line per criterion, exact equality only.

use std::process::ExitCode;

use partial_hopf::algebra::{tensor_vec, Algebra};
use partial_hopf::catalog::{catalog, dual_group_global, ex_dg, ex_null, ex_sw, subgroup_idempotent, Params, NAMES};
use partial_hopf::envelope::standard_envelope;
use partial_hopf::galois::{galois_report, induced_coaction};
use partial_hopf::group::Group;
use partial_hopf::hopf::HopfAlgebra;
use partial_hopf::linalg::{add_scaled, zero_vector, Subspace, Vector};
use partial_hopf::morita::morita_context;
use partial_hopf::paction::{induce_partial, PartialAction};
use partial_hopf::report::Report;
use partial_hopf::scalar::{Field, Scalar};
use partial_hopf::smash::smash_product;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const Q: Field = Field::Rational;

fn r(n: i64, d: i64) -> Scalar {
    Q.ratio(n, d).unwrap()
}

fn clean(rep: &Report, what: &str) -> Outcome {
    match rep.failures().next() {
        Some(c) => Err(format!("{what}: {} failed ({})", c.name, c.witness.as_ref().map(|w| w.detail.clone()).unwrap_or_default())),
        None => Ok(()),
    }
}

fn passed(rep: &Report, name: &str) -> Outcome {
    let c = rep.find(name).ok_or_else(|| format!("no check named {name:?}"))?;
    ensure!(c.status == partial_hopf::report::Status::Pass, "{name}: {:?}", c.status);
    Ok(())
}

fn catalog_actions() -> Vec<(String, PartialAction)> {
    let mut out: Vec<(String, PartialAction)> =
        NAMES.iter().map(|n| (n.to_string(), catalog(n, &Params::default()).unwrap().partial_action().unwrap())).collect();
    let trivial_k = Params { algebra: Some("k".into()), ..Params::default() };
    out.push(("trivial kC2 on k".into(), catalog("trivial", &trivial_k).unwrap().partial_action().unwrap()));
    out.push(("ex-sw α=3/2".into(), ex_sw(Q, &r(3, 2)).unwrap()));
    out
}

fn criterion_1() -> Outcome {
    let p = ex_sw(Q, &Q.one()).unwrap();
    let expected = [r(1, 2), r(1, 2), Q.zero(), r(-1, 1)];
    for (i, v) in expected.iter().enumerate() {
        ensure!(p.unit_orbit(i) == vec![v.clone()], "{}·1 = {:?}", p.hopf().names()[i], p.unit_orbit(i));
    }
    let env = standard_envelope(&p).map_err(|e| e.to_string())?;
    clean(&env.verify(), "envelope")?;
    ensure!(env.b.dim() == 2, "dim B = {}", env.b.dim());
    let b = env.b_algebra().ok_or("B is not unital")?;
    let idem = b.primitive_central_idempotents();
    ensure!(idem.len() == 2, "{} primitive idempotents", idem.len());
    let (e, f) = (&idem[0], &idem[1]);
    ensure!(b.mul(e, e) == *e && b.mul(f, f) == *f, "not idempotent");
    ensure!(b.mul(e, f) == b.zero() && b.mul(f, e) == b.zero(), "not orthogonal");
    let mut sum = e.clone();
    add_scaled(&mut sum, &Q.one(), f);
    ensure!(sum == *b.unit(), "e + f ≠ 1_B");
    Ok(())
}

fn criterion_2() -> Outcome {
    let p = ex_dg(Q, 4, 2).unwrap();
    let (rep, profile) = p.verify();
    clean(&rep, "axioms (i)-(iii)")?;
    ensure!(profile.symmetric, "axiom (iv) fails");
    let one = p.algebra().unit().clone();
    ensure!(one == vec![Q.one(), Q.zero()], "1_A is not the first basis vector");
    // p_1, p_g, p_{g²}, p_{g³}; N = {1, g²}.
    for g in 0..4 {
        let want: Vector = if g % 2 == 0 { one.iter().map(|c| c * &r(1, 2)).collect() } else { zero_vector(Q, 2) };
        ensure!(p.unit_orbit(g) == want, "p_{g}·1 = {:?}", p.unit_orbit(g));
    }
    let eps = p.hopf().counit()[2].clone();
    ensure!(p.unit_orbit(2) != one.iter().map(|c| c * &eps).collect::<Vector>(), "p_g²·1 = ε(p_g²)1");
    ensure!(!profile.global, "flagged global");
    Ok(())
}

fn criterion_3() -> Outcome {
    let p = ex_dg(Q, 4, 2).unwrap();
    let inv = p.invariants();
    let e_n = p.algebra().unit().clone();
    ensure!(inv == Subspace::span(Q, 2, [&e_n]), "A^H has dim {}", inv.dim());
    let integrals = p.hopf().integrals().map_err(|e| e.to_string())?;
    ensure!(integrals.t == vec![Q.one(), Q.zero(), Q.zero(), Q.zero()], "t = {:?}", integrals.t);
    let tr = p.trace(&integrals).map_err(|e| e.to_string())?;
    ensure!(tr.surjective, "trace not surjective");
    let two_en: Vector = e_n.iter().map(|c| c * &Q.int(2)).collect();
    ensure!(p.act(&integrals.t, &two_en) == e_n, "tr(2e_N) ≠ 1_A");
    let bim = p.trace_bimodule_report(&tr);
    clean(&bim, "trace bimodule")?;
    passed(&bim, "tr(ab) = tr(a)b for b ∈ A^H")?;
    passed(&bim, "tr(ba) = b tr(a) for b ∈ A^H")
}

fn criterion_4() -> Outcome {
    for (name, p) in catalog_actions() {
        let s = smash_product(&p);
        let rep = s.verify();
        for check in [
            "smash algebra: associativity (e_i e_j) e_k = e_i (e_j e_k)",
            "Σ (1#h₁)(a#1)(1#S(h₂)) = (h·a)#1",
            "A#H = (1#H)(A#1)",
        ] {
            passed(&rep, check).map_err(|e| format!("{name}: {e}"))?;
        }
    }
    let p = ex_dg(Q, 4, 2).unwrap();
    let s = smash_product(&p);
    let integrals = p.hopf().integrals().unwrap();
    let c: Vector = p.algebra().unit().iter().map(|x| x * &Q.int(2)).collect();
    let te = s.trace_idempotent(&integrals, &c).map_err(|e| e.to_string())?;
    let e = s.mul(&s.one_h(&integrals.t), &s.a1(&c));
    ensure!(te.e == e, "e differs from (1#t)(2e_N#1)");
    ensure!(s.mul(&e, &e) == e, "e² ≠ e");
    clean(&te.checks, "trace idempotent")?;
    passed(&te.checks, "e(A#H)e = (A^H#1)e")?;
    passed(&te.checks, "((a#1)e)((b#1)e) = (ab#1)e")
}

fn radford(h: &HopfAlgebra) -> bool {
    let data = h.integrals().unwrap();
    let n = h.dim();
    let d = h.delta(&data.t);
    let mut rhs = zero_vector(h.field(), n);
    for j in 0..n {
        for k in 0..n {
            let c = &d[j * n + k] * &data.alpha[k];
            rhs[j] += &c;
        }
    }
    h.s(&data.t) == rhs
}

fn criterion_5() -> Outcome {
    for (name, p) in [("ex-dg", ex_dg(Q, 4, 2).unwrap()), ("ex-null", ex_null(Q, 2).unwrap())] {
        let s = smash_product(&p);
        let m = morita_context(&s, &p.hopf().integrals().unwrap()).map_err(|e| format!("{name}: {e}"))?;
        let rep = m.verify();
        clean(&rep, name)?;
        for check in ["[a, b] ⊳ c = a⟨b, c⟩", "a ⊲ [b, c] = ⟨a, b⟩c", "⟨a ⊲ s, b⟩ = ⟨a, s ⊳ b⟩", "[ac, b] = [a, cb] for c ∈ A^H"] {
            passed(&rep, check).map_err(|e| format!("{name}: {e}"))?;
        }
    }
    let c2 = Group::cyclic(2).unwrap();
    let c4 = Group::cyclic(4).unwrap();
    for (name, h) in [
        ("kC2", HopfAlgebra::group_algebra(Q, &c2)),
        ("(kC4)*", HopfAlgebra::dual_group_algebra(Q, &c4)),
        ("H4", HopfAlgebra::sweedler(Q)),
    ] {
        ensure!(radford(&h), "S(t) ≠ Σ α(t₂)t₁ for {name}");
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut both_false_seen = false;
    for (name, p) in catalog_actions() {
        let c = induced_coaction(&p);
        ensure!(c.coinvariants() == p.invariants(), "{name}: A^coH* ≠ A^H");
        let g = galois_report(&p).map_err(|e| format!("{name}: {e}"))?;
        clean(&g.checks, &name)?;
        ensure!(g.equivalences_consistent, "{name}: inconsistent");
        if let Some(st) = g.strictness {
            ensure!(st.bracket_surjective == g.can_surjective, "{name}: (i) and (iii) disagree");
            if name == "trivial kC2 on k" {
                ensure!(!st.bracket_surjective && !g.can_surjective, "negative instance is surjective");
                both_false_seen = true;
            }
        }
    }
    ensure!(both_false_seen, "negative instance not exercised");
    let p = ex_dg(Q, 4, 2).unwrap();
    let g = galois_report(&p).map_err(|e| e.to_string())?;
    ensure!(g.source.dim() == 4 && g.underline.dim() == 4 && g.can_matrix.rank() == 4, "can is not 4 = 4 full rank");
    ensure!(g.can_bijective, "can not bijective");
    ensure!(g.strictness.map(|s| s.strict()) == Some(true), "Morita context not strict");
    passed(&g.checks, "[a, b] = (I⊗θ) can(a ⊗ b)")?;
    let t = p.hopf().integrals().unwrap().t;
    let a = p.algebra();
    for x in 0..a.dim() {
        let ax = a.basis(x);
        let mut sum = a.zero();
        for (ai, bi) in &g.proj_basis {
            add_scaled(&mut sum, &Q.one(), &a.mul(ai, &p.act(&t, &a.mul(bi, &ax))));
        }
        ensure!(sum == ax, "reconstruction fails at basis {x}");
    }
    Ok(())
}

fn globals() -> Vec<(String, PartialAction)> {
    let k = Algebra::ground(Q);
    let c2 = Group::cyclic(2).unwrap();
    let c3 = Group::cyclic(3).unwrap();
    let kc2 = HopfAlgebra::group_algebra(Q, &c2);
    vec![
        ("ε-action kC2 on kC2".into(), PartialAction::trivial(kc2.clone(), kc2.algebra().clone())),
        ("ε-action kC3 on k".into(), PartialAction::trivial(HopfAlgebra::group_algebra(Q, &c3), k.clone())),
        ("ε-action H4 on k".into(), PartialAction::trivial(HopfAlgebra::sweedler(Q), k)),
        ("ε-action H4 on H4".into(), PartialAction::trivial(HopfAlgebra::sweedler(Q), HopfAlgebra::sweedler(Q).algebra().clone())),
        ("(kC4)* on kC4".into(), dual_group_global(Q, &Group::cyclic(4).unwrap())),
        ("(kC6)* on kC6".into(), dual_group_global(Q, &Group::cyclic(6).unwrap())),
    ]
}

fn criterion_7() -> Outcome {
    for (name, p) in globals() {
        ensure!(p.verify().1.global, "{name}: not global");
        ensure!(p.invariants() == p.classical_invariants(), "{name}: A^H ≠ classical invariants");
        let s = smash_product(&p);
        ensure!(s.carrier.is_full(), "{name}: carrier has dim {} < {}", s.carrier.dim(), p.adim() * p.hdim());
        let c = induced_coaction(&p);
        clean(&c.verify(), &name)?;
        ensure!(c.rho_one() == tensor_vec(p.algebra().unit(), c.hstar.unit()), "{name}: ρ(1) ≠ 1⊗1");
        // (ρ⊗I)ρ = (I⊗Δ)ρ without the ρ(1) factor.
        let (na, nh) = (p.adim(), p.hdim());
        for x in 0..na {
            let rx = c.rho_of(&p.algebra().basis(x));
            let mut left = zero_vector(Q, na * nh * nh);
            let mut right = zero_vector(Q, na * nh * nh);
            for (k, v) in rx.iter().enumerate() {
                let (b, g) = (k / nh, k % nh);
                for (m, w) in c.rho_of(&p.algebra().basis(b)).iter().enumerate() {
                    left[m * nh + g] += &(v * w);
                }
                for (u, w, d) in c.hstar.delta_terms(g) {
                    right[(b * nh + u) * nh + w] += &(v * d);
                }
            }
            ensure!(left == right, "{name}: coaction not coassociative at {x}");
        }
    }
    Ok(())
}

fn induced_suite(field: Field, n: usize) -> Outcome {
    let g = Group::cyclic(n).unwrap();
    let global = dual_group_global(field, &g);
    let b = global.algebra();
    let mut idem = b.central_idempotents();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        if let Ok(e) = subgroup_idempotent(field, &g, &g.generated(&[d % n])) {
            ensure!(idem.contains(&e), "kC{n}: e_N for N = ⟨g^{d}⟩ not among the central idempotents");
        }
    }
    idem.retain(|u| u.iter().any(|c| !c.is_zero()));
    for u in idem {
        let tag = format!("kC{n} over {}, u = {}", field.name(), partial_hopf::linalg::fmt_vector(&u));
        let p = induce_partial(&global, &u).map_err(|e| format!("{tag}: {e}"))?;
        let (rep, profile) = p.verify();
        clean(&rep, &tag)?;
        ensure!(profile.symmetric && profile.central_unit_orbit, "{tag}: not symmetric/central");
        let integrals = p.hopf().integrals().unwrap();
        let tr = p.trace(&integrals).map_err(|e| format!("{tag}: {e}"))?;
        clean(&p.trace_bimodule_report(&tr), &tag)?;
        let s = smash_product(&p);
        clean(&s.verify(), &tag)?;
        if let Some(c) = &tr.preimage_of_unit {
            clean(&s.trace_idempotent(&integrals, c).map_err(|e| format!("{tag}: {e}"))?.checks, &tag)?;
        }
        let m = morita_context(&s, &integrals).map_err(|e| format!("{tag}: {e}"))?;
        clean(&m.verify(), &tag)?;
        let c = induced_coaction(&p);
        ensure!(c.coinvariants() == p.invariants(), "{tag}: A^coH* ≠ A^H");
        let gr = galois_report(&p).map_err(|e| format!("{tag}: {e}"))?;
        clean(&gr.checks, &tag)?;
        ensure!(gr.equivalences_consistent, "{tag}: inconsistent");
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for n in [2, 3, 4, 6] {
        induced_suite(Q, n)?;
    }
    induced_suite(Field::prime(7).unwrap(), 6)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Sweedler example: action values and B ≅ k × k", criterion_1),
        ("dual-group example: axioms, p_g·1 and genuine partiality", criterion_2),
        ("invariants and partial trace of the dual-group example", criterion_3),
        ("smash products and the trace idempotent", criterion_4),
        ("Morita contexts and S(t) = Σ α(t₂)t₁", criterion_5),
        ("Galois consistency", criterion_6),
        ("global actions degenerate to classical ones", criterion_7),
        ("induced actions from every central idempotent of kC_n", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("PASS criterion {}: {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
