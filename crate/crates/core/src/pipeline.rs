//! The verification pipeline behind the `pha` command.

use std::fmt;
use std::str::FromStr;

use crate::document::Document;
use crate::envelope::standard_envelope;
use crate::error::{Error, Result};
use crate::galois::galois_report;
use crate::hopf::IntegralData;
use crate::linalg::fmt_vector;
use crate::morita::{end_module_check, morita_context};
use crate::paction::{PartialAction, Profile, TraceData};
use crate::report::{Report, Witness};
use crate::smash::smash_product;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Verify,
    Invariants,
    Trace,
    Envelope,
    Smash,
    Morita,
    Galois,
    Full,
}

impl Stage {
    pub const ALL: [Stage; 8] =
        [Stage::Verify, Stage::Invariants, Stage::Trace, Stage::Envelope, Stage::Smash, Stage::Morita, Stage::Galois, Stage::Full];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Verify => "verify",
            Stage::Invariants => "invariants",
            Stage::Trace => "trace",
            Stage::Envelope => "envelope",
            Stage::Smash => "smash",
            Stage::Morita => "morita",
            Stage::Galois => "galois",
            Stage::Full => "full",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Stage> {
        Stage::ALL.into_iter().find(|st| st.name() == s).ok_or_else(|| Error::Catalog(format!("unknown subcommand {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Exit status: 0 when nothing failed, 1 when some check was refuted.
pub fn exit_code(r: &Report) -> i32 {
    if r.all_passed() {
        0
    } else {
        1
    }
}

pub fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Text => r.to_text(),
        Format::Json => {
            let mut s = r.to_json();
            s.push('\n');
            s
        }
    }
}

struct Ctx {
    p: PartialAction,
    profile: Profile,
    integrals: Option<IntegralData>,
    trace: Option<TraceData>,
}

fn fail_on(r: &mut Report, name: &str, citation: &str, e: &Error) {
    r.fail(name, citation, Witness::new(&[], e.to_string()));
}

impl Ctx {
    fn new(p: PartialAction, r: &mut Report) -> Ctx {
        r.value("dim H", p.hdim());
        r.value("dim A", p.adim());
        r.absorb("algebra", p.algebra().verify());
        r.absorb("hopf", p.hopf().verify());
        let (ar, profile) = p.verify();
        r.absorb("action", ar);
        r.flag("global", profile.global);
        r.flag("symmetric", profile.symmetric);
        r.flag("central", profile.central_unit_orbit);
        let integrals = p.hopf().integrals().ok();
        let trace = match &integrals {
            Some(i) if profile.symmetric && profile.central_unit_orbit => p.trace(i).ok(),
            _ => None,
        };
        Ctx { p, profile, integrals, trace }
    }

    fn symmetric_central(&self) -> bool {
        self.profile.symmetric && self.profile.central_unit_orbit
    }

    fn invariants(&self, r: &mut Report) {
        let inv = self.p.invariants();
        r.value("dim A^H", inv.dim());
        r.expect("1_A ∈ A^H", "invariants", inv.contains(self.p.algebra().unit()), || Witness::new(&[], "1_A is not invariant"));
        if self.profile.global {
            let classical = self.p.classical_invariants();
            r.expect("A^H equals the classical invariants", "invariants.global", classical == inv, || {
                Witness::new(&[], format!("dim A^H = {}, classical dim = {}", inv.dim(), classical.dim()))
            });
        } else {
            r.skip("A^H equals the classical invariants", "invariants.global", "action is not global");
        }
    }

    fn trace(&self, r: &mut Report) {
        let h = self.p.hopf();
        let integrals = match h.integrals() {
            Ok(i) => i,
            Err(e) => return fail_on(r, "integrals of H", "hopf.integrals", &e),
        };
        r.value("t", fmt_vector(&integrals.t));
        r.value("α", fmt_vector(&integrals.alpha));
        r.flag("semisimple", integrals.semisimple);
        r.flag("unimodular", integrals.unimodular);
        r.expect("S(t) = Σ α(t₂) t₁", "hopf.radford", h.radford_check(&integrals), || Witness::new(&[], "S(t) differs"));
        if !self.symmetric_central() {
            r.skip("partial trace", "trace", "action is not symmetric with central h·1");
            return;
        }
        match self.p.trace(&integrals) {
            Ok(data) => {
                r.flag("trace_surjective", data.surjective);
                r.value("rank tr", data.image.dim());
                if let Some(c) = &data.preimage_of_unit {
                    r.value("tr⁻¹(1_A)", fmt_vector(c));
                }
                r.absorb("trace", self.p.trace_bimodule_report(&data));
            }
            Err(e) => fail_on(r, "partial trace", "trace", &e),
        }
    }

    fn envelope(&self, r: &mut Report) {
        let env = match standard_envelope(&self.p) {
            Ok(e) => e,
            Err(e) => return fail_on(r, "standard envelope", "envelope", &e),
        };
        r.value("dim B", env.b.dim());
        r.absorb("envelope", env.verify());
        match env.invariants() {
            Ok(inv) => {
                r.value("dim 1_A B^H", inv.ubh.dim());
                r.pass("1_A B^H ⊆ A^H", "envelope.invariants");
                match (&self.trace, &self.integrals) {
                    (Some(t), Some(i)) => {
                        r.expect("tr surjective ⟹ 1_A B^H = A^H", "envelope.invariants", !t.surjective || inv.equals_ah, || {
                            Witness::new(&[], "trace is surjective but 1_A B^H ≠ A^H")
                        });
                        let hyp = i.semisimple && i.unimodular && inv.equals_ah;
                        r.expect("semisimple, unimodular, 1_A B^H = A^H ⟹ tr surjective", "envelope.invariants", !hyp || t.surjective, || {
                            Witness::new(&[], "hypotheses hold but the trace is not surjective")
                        });
                    }
                    _ => r.skip("tr surjective ⟺ 1_A B^H = A^H", "envelope.invariants", "no partial trace"),
                }
            }
            Err(e) => fail_on(r, "1_A B^H ⊆ A^H", "envelope.invariants", &e),
        }
    }

    fn smash(&self, r: &mut Report) {
        let s = smash_product(&self.p);
        r.value("dim A#H", s.dim());
        r.absorb("smash", s.verify());
        match (&self.trace, &self.integrals) {
            (Some(TraceData { preimage_of_unit: Some(c), .. }), Some(i)) => match s.trace_idempotent(i, c) {
                Ok(te) => {
                    r.value("e", fmt_vector(&te.e));
                    r.value("dim e(A#H)e", te.corner_dim);
                    r.absorb("idempotent", te.checks);
                }
                Err(e) => fail_on(r, "trace idempotent", "smash.idempotent", &e),
            },
            _ => r.skip("trace idempotent", "smash.idempotent", "trace is not surjective"),
        }
    }

    fn morita(&self, r: &mut Report) {
        let Some(i) = &self.integrals else {
            return r.skip("Morita context", "morita", "no integral");
        };
        if !self.symmetric_central() {
            return r.skip("Morita context", "morita", "action is not symmetric with central h·1");
        }
        if self.p.hopf().antipode_inverse().is_err() {
            return r.skip("Morita context", "morita", "antipode is not invertible");
        }
        let s = smash_product(&self.p);
        match morita_context(&s, i) {
            Ok(m) => {
                r.value("dim A ⊗_{A^H} A", m.tensor_ah.dim());
                r.value("dim A ⊗_{A#H} A", m.tensor_s.dim());
                r.absorb("morita", m.verify());
                let st = m.strictness();
                r.flag("bracket_surjective", st.bracket_surjective);
                r.flag("pairing_surjective", st.pairing_surjective);
                r.flag("strict", st.strict());
            }
            Err(e) => fail_on(r, "Morita context", "morita", &e),
        }
        r.absorb("end", end_module_check(&s));
    }

    fn galois(&self, r: &mut Report) {
        match galois_report(&self.p) {
            Ok(g) => {
                r.value("dim A ⊗_{A^H} A", g.source.dim());
                r.value("dim (A⊗H*)ρ(1)", g.underline.dim());
                r.value("rank can", g.can_matrix.rank());
                r.value("ρ(1)", fmt_vector(&g.coaction.rho_one()));
                r.absorb("galois", g.checks);
                if let Some(st) = g.strictness {
                    r.flag("strict", st.strict());
                }
                r.expect("Galois equivalences agree", "galois.equivalence", g.equivalences_consistent, || {
                    Witness::new(&[], "the equivalence flags disagree")
                });
            }
            Err(e) => fail_on(r, "Galois report", "galois", &e),
        }
    }
}

/// Runs one subcommand on a partial action. The basic axioms and the
/// profile flags are always part of the report.
pub fn run_action(stage: Stage, p: PartialAction) -> Report {
    let mut r = Report::new();
    let ctx = Ctx::new(p, &mut r);
    let all = stage == Stage::Full;
    if all || stage == Stage::Invariants {
        ctx.invariants(&mut r);
    }
    if all || stage == Stage::Trace {
        ctx.trace(&mut r);
    }
    if all || stage == Stage::Envelope {
        ctx.envelope(&mut r);
    }
    if all || stage == Stage::Smash {
        ctx.smash(&mut r);
    }
    if all || stage == Stage::Morita {
        ctx.morita(&mut r);
    }
    if all || stage == Stage::Galois {
        ctx.galois(&mut r);
    }
    if let Some(t) = &ctx.trace {
        r.flag("trace_surjective", t.surjective);
    }
    r
}

/// Runs a subcommand on a document; errors are input errors.
pub fn run(stage: Stage, doc: &Document) -> Result<Report> {
    Ok(run_action(stage, doc.partial_action()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, Params};

    #[test]
    fn full_on_ex_dg() {
        let d = catalog("ex-dg", &Params::default()).unwrap();
        let r = run(Stage::Full, &d).unwrap();
        assert_eq!(exit_code(&r), 0, "{}", r.to_text());
        for k in ["symmetric", "central", "trace_surjective", "strict", "galois"] {
            assert_eq!(r.summary.get(k), Some(&true), "{k}");
        }
        assert_eq!(r.summary.get("global"), Some(&false));
    }

    #[test]
    fn stage_names_round_trip() {
        for st in Stage::ALL {
            assert_eq!(st.name().parse::<Stage>().unwrap(), st);
        }
    }
}
