//! Partial smash products and the idempotent e = (1#t)(c#1).

use partial_hopf::catalog::{ex_dg, ex_null};
use partial_hopf::linalg::fmt_vector;
use partial_hopf::scalar::Field;
use partial_hopf::smash::smash_product;

fn main() {
    let q = Field::Rational;
    for (name, p) in [("ex-dg", ex_dg(q, 4, 2).unwrap()), ("ex-null", ex_null(q, 2).unwrap())] {
        let s = smash_product(&p);
        let r = s.verify();
        println!("{name}: dim A#H = {} inside dim A⊗H = {}, checks pass = {}", s.dim(), p.adim() * p.hdim(), r.all_passed());
        let i = p.hopf().integrals().unwrap();
        let tr = p.trace(&i).unwrap();
        if let Some(c) = tr.preimage_of_unit {
            let te = s.trace_idempotent(&i, &c).unwrap();
            println!("  e = {}, dim e(A#H)e = {}", fmt_vector(&te.e), te.corner_dim);
            print!("{}", te.checks.to_text());
        }
    }
}
