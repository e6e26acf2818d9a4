//! A partial action of C2 on k × k given by ideals and isomorphisms.

use partial_hopf::algebra::Algebra;
use partial_hopf::group::Group;
use partial_hopf::linalg::Matrix;
use partial_hopf::paction::from_partial_group_action;
use partial_hopf::pipeline::{run_action, Stage};
use partial_hopf::scalar::Field;

fn main() {
    let q = Field::Rational;
    let (zero, one) = (q.zero(), q.one());
    let a = Algebra::diagonal(q, 2);
    // D_1 = A, D_g = k d0 with α_g the identity on it.
    let domains = vec![vec![one.clone(), one.clone()], vec![one.clone(), zero.clone()]];
    let maps = vec![Matrix::identity(q, 2), Matrix::from_rows(q, 2, &[vec![one, zero.clone()], vec![zero.clone(), zero]])];
    let p = from_partial_group_action(&Group::cyclic(2).unwrap(), &a, &domains, &maps).unwrap();
    print!("{}", run_action(Stage::Full, p).to_text());
}
