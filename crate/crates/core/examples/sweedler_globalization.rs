//! The Sweedler example: H4* acting partially on k and its envelope.

use partial_hopf::catalog::ex_sw;
use partial_hopf::envelope::standard_envelope;
use partial_hopf::linalg::fmt_vector;
use partial_hopf::scalar::Field;

fn main() {
    let q = Field::Rational;
    let alpha = q.ratio(1, 1).unwrap();
    let p = ex_sw(q, &alpha).unwrap();
    for i in 0..p.hdim() {
        println!("{} · 1 = {}", p.hopf().names()[i], p.unit_orbit(i)[0]);
    }
    let env = standard_envelope(&p).unwrap();
    print!("{}", env.verify().to_text());
    println!("dim B = {}", env.b.dim());
    let b = env.b_algebra().expect("B is unital");
    for e in b.primitive_central_idempotents() {
        println!("primitive idempotent of B: {}", fmt_vector(&e));
    }
}
