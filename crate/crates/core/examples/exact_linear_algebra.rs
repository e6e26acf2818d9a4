//! Row reduction, kernels and quotients over Q and GF(p).

use partial_hopf::linalg::{kernel, quotient, solve, Matrix, Subspace};
use partial_hopf::scalar::Field;

fn main() {
    for f in [Field::Rational, Field::prime(5).unwrap()] {
        let s = |n: i64, d: i64| f.ratio(n, d).unwrap();
        let m = Matrix::from_rows(f, 3, &[vec![s(1, 1), s(2, 1), s(3, 1)], vec![s(1, 2), s(1, 1), s(3, 2)], vec![s(0, 1), s(1, 1), s(1, 3)]]);
        println!("over {}: rank {}", f.name(), m.rank());
        let ker = kernel(&m);
        println!("  kernel has dim {}", ker.dim());
        let b = m.apply(&[s(1, 1), s(1, 1), s(1, 1)]);
        let sol = solve(&m, &b).unwrap();
        println!("  a solution of Mx = {:?}: {:?}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>(), sol.particular.map(|x| x.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
        let all = Subspace::full(f, 3);
        let line = Subspace::span(f, 3, [&vec![s(1, 1), s(1, 1), s(0, 1)]]);
        let q = quotient(&all, &line).unwrap();
        println!("  k³ / line has dim {}", q.dim());
    }
}
