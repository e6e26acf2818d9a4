//! (kC_n)* acting partially on e_N kC_n: invariants and the partial trace.

use partial_hopf::catalog::ex_dg;
use partial_hopf::linalg::fmt_vector;
use partial_hopf::scalar::Field;

fn main() {
    let q = Field::Rational;
    for (n, m) in [(4, 2), (6, 2), (6, 3)] {
        let p = ex_dg(q, n, m).unwrap();
        let (rep, profile) = p.verify();
        println!("n = {n}, m = {m}: axioms pass = {}, symmetric = {}, global = {}", rep.all_passed(), profile.symmetric, profile.global);
        for g in 0..p.hdim() {
            println!("  {} · 1 = {}", p.hopf().names()[g], fmt_vector(&p.unit_orbit(g)));
        }
        let inv = p.invariants();
        let i = p.hopf().integrals().unwrap();
        let tr = p.trace(&i).unwrap();
        println!("  dim A^H = {}, trace surjective = {}", inv.dim(), tr.surjective);
        if let Some(c) = tr.preimage_of_unit {
            println!("  tr({}) = 1_A", fmt_vector(&c));
        }
    }
}
