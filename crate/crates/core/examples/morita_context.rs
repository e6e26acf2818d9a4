//! The Morita context between A^H and A#H, and its strictness.

use partial_hopf::algebra::Algebra;
use partial_hopf::catalog::{ex_dg, ex_null};
use partial_hopf::hopf::HopfAlgebra;
use partial_hopf::morita::morita_context;
use partial_hopf::paction::PartialAction;
use partial_hopf::scalar::Field;
use partial_hopf::smash::smash_product;

fn main() {
    let q = Field::Rational;
    let cases = [
        ("ex-dg", ex_dg(q, 4, 2).unwrap()),
        ("ex-null", ex_null(q, 2).unwrap()),
        ("H4 on k by ε", PartialAction::trivial(HopfAlgebra::sweedler(q), Algebra::ground(q))),
    ];
    for (name, p) in cases {
        let s = smash_product(&p);
        let m = morita_context(&s, &p.hopf().integrals().unwrap()).unwrap();
        let r = m.verify();
        let st = m.strictness();
        println!(
            "{name}: {} checks, all pass = {}, dim A⊗_{{A^H}}A = {}, [,] onto = {}, ⟨,⟩ onto = {}",
            r.checks.len(),
            r.all_passed(),
            m.tensor_ah.dim(),
            st.bracket_surjective,
            st.pairing_surjective
        );
    }
}
