//! Integrals, modular functions and S(t) = Σ α(t₂) t₁.

use partial_hopf::group::Group;
use partial_hopf::hopf::HopfAlgebra;
use partial_hopf::linalg::fmt_vector;
use partial_hopf::scalar::Field;

fn main() {
    let q = Field::Rational;
    let c4 = Group::cyclic(4).unwrap();
    let cases = [
        ("kC2", HopfAlgebra::group_algebra(q, &Group::cyclic(2).unwrap())),
        ("(kC4)*", HopfAlgebra::dual_group_algebra(q, &c4)),
        ("H4", HopfAlgebra::sweedler(q)),
        ("H4*", HopfAlgebra::sweedler(q).dual()),
    ];
    for (name, h) in cases {
        assert!(h.verify().all_passed());
        let i = h.integrals().unwrap();
        println!(
            "{name}: t = {}, α = {}, semisimple = {}, unimodular = {}, S(t) = Σ α(t₂)t₁: {}",
            fmt_vector(&i.t),
            fmt_vector(&i.alpha),
            i.semisimple,
            i.unimodular,
            h.radford_check(&i)
        );
    }
}
