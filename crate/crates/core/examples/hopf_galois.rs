//! Coactions, the canonical map and the Galois equivalences.

use partial_hopf::algebra::Algebra;
use partial_hopf::catalog::{ex_dg, ex_null, ex_sw};
use partial_hopf::galois::galois_report;
use partial_hopf::group::Group;
use partial_hopf::hopf::HopfAlgebra;
use partial_hopf::paction::PartialAction;
use partial_hopf::scalar::Field;

fn main() {
    let q = Field::Rational;
    let kc2 = HopfAlgebra::group_algebra(q, &Group::cyclic(2).unwrap());
    let cases = [
        ("ex-dg", ex_dg(q, 4, 2).unwrap()),
        ("ex-null", ex_null(q, 2).unwrap()),
        ("ex-sw", ex_sw(q, &q.one()).unwrap()),
        ("kC2 on k by ε", PartialAction::trivial(kc2, Algebra::ground(q))),
    ];
    for (name, p) in cases {
        let g = galois_report(&p).unwrap();
        println!(
            "{name}: dim A⊗_{{A^H}}A = {}, dim (A⊗H*)ρ(1) = {}, rank can = {}, Galois = {}, strict = {:?}, consistent = {}",
            g.source.dim(),
            g.underline.dim(),
            g.can_matrix.rank(),
            g.can_bijective,
            g.strictness.map(|s| s.strict()),
            g.equivalences_consistent
        );
        if !g.proj_basis.is_empty() {
            println!("  {} projective basis pairs", g.proj_basis.len());
        }
    }
}
