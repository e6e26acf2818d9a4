use proptest::prelude::*;

use partial_hopf::algebra::Algebra;
use partial_hopf::catalog::{catalog, dual_group_global, ex_dg, Params, NAMES};
use partial_hopf::document::Document;
use partial_hopf::group::Group;
use partial_hopf::hopf::HopfAlgebra;
use partial_hopf::linalg::{kernel, quotient, solve, Matrix, Subspace, Tensor3, Vector};
use partial_hopf::paction::{induce_partial, PartialAction};
use partial_hopf::scalar::{Field, Scalar};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(2).unwrap()), Just(Field::prime(7).unwrap()), Just(Field::prime(101).unwrap())]
}

fn scalar(f: Field) -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_filter_map("denominator vanishes", move |(n, d)| f.ratio(n, d).ok())
}

fn vector(f: Field, n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(f), n)
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(vector(f, rows), cols).prop_map(move |c| Matrix::from_columns(f, rows, &c))
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

fn two_subspaces() -> impl Strategy<Value = (Subspace, Subspace)> {
    (field(), 1usize..5, 0usize..4, 0usize..4).prop_flat_map(|(f, n, a, b)| {
        (prop::collection::vec(vector(f, n), a), prop::collection::vec(vector(f, n), b))
            .prop_map(move |(u, v)| (Subspace::span(f, n, &u), Subspace::span(f, n, &v)))
    })
}

proptest! {
    #[test]
    fn field_axioms(f in field()) {
        let xs: Vec<Scalar> = (-3..=3).map(|n| f.int(n)).collect();
        for a in &xs {
            for b in &xs {
                prop_assert_eq!(a + b, b + a);
                prop_assert_eq!(a * b, b * a);
                for c in &xs {
                    prop_assert_eq!(&(a * b) * c, a * &(b * c));
                    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
            }
            if let Some(i) = a.inv() {
                prop_assert!((a * &i).is_one());
            } else {
                prop_assert!(a.is_zero());
            }
        }
    }

    #[test]
    fn scalars_print_and_parse(f in field(), n in -50i64..50, d in 1i64..20) {
        if let Ok(x) = f.ratio(n, d) {
            prop_assert_eq!(f.parse(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        prop_assert_eq!(m.rank() + kernel(&m).dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in kernel(&m).basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_reproduces_right_hand_side(m in sized_matrix(), seed in prop::collection::vec(-3i64..3, 4)) {
        let f = m.field();
        let x: Vector = (0..m.cols()).map(|i| f.int(seed[i % seed.len()])).collect();
        let b = m.apply(&x);
        let sol = solve(&m, &b).unwrap();
        let p = sol.particular.expect("b is in the image");
        prop_assert_eq!(m.apply(&p), b);
        prop_assert_eq!(sol.kernel.dim(), m.cols() - m.rank());
    }

    #[test]
    fn inverse_is_two_sided(m in (field(), 1usize..5).prop_flat_map(|(f, n)| matrix(f, n, n))) {
        match m.inverse() {
            Some(inv) => {
                let id = Matrix::identity(m.field(), m.rows());
                prop_assert_eq!(m.mul(&inv), id.clone());
                prop_assert_eq!(inv.mul(&m), id);
            }
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn subspace_lattice((u, v) in two_subspaces()) {
        let s = u.sum(&v);
        let i = u.intersection(&v);
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
        prop_assert_eq!(Subspace::span(u.field(), u.ambient(), &u.basis_vectors()), u.clone());
    }

    #[test]
    fn quotient_section_and_projection((u, v) in two_subspaces()) {
        let space = u.sum(&v);
        let q = quotient(&space, &v).unwrap();
        prop_assert_eq!(q.dim(), space.dim() - v.dim());
        for k in 0..q.dim() {
            let mut c: Vector = vec![space.field().zero(); q.dim()];
            c[k] = space.field().one();
            prop_assert_eq!(q.project(&q.lift(&c)), c);
        }
        for w in v.basis_vectors() {
            prop_assert!(q.project(&w).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn group_algebras_are_hopf(factors in prop::collection::vec(1usize..4, 1..3), f in field()) {
        let g = Group::abelian(&factors).unwrap();
        let h = HopfAlgebra::group_algebra(f, &g);
        prop_assert!(h.verify().all_passed());
        let d = HopfAlgebra::dual_group_algebra(f, &g);
        prop_assert!(d.verify().all_passed());
        prop_assert!(h.dual().dual().same_structure(&h));
    }

    #[test]
    fn induced_actions_pass_axioms(n in 2usize..7, pick in any::<prop::sample::Index>()) {
        let g = Group::cyclic(n).unwrap();
        let global = dual_group_global(Field::Rational, &g);
        let idem: Vec<Vector> = global.algebra().central_idempotents().into_iter().filter(|u| u.iter().any(|c| !c.is_zero())).collect();
        let u = pick.get(&idem);
        let p = induce_partial(&global, u).unwrap();
        let (rep, profile) = p.verify();
        prop_assert!(rep.all_passed(), "{}", rep.to_text());
        prop_assert!(profile.symmetric && profile.central_unit_orbit);
        prop_assert_eq!(profile.global, u == global.algebra().unit());
        prop_assert!(p.invariants().contains(p.algebra().unit()));
    }

    #[test]
    fn corrupted_action_witness_rechecks(i in 0usize..4, a in 0usize..2, b in 0usize..2, num in 1i64..5) {
        let p = ex_dg(Field::Rational, 4, 2).unwrap();
        let f = Field::Rational;
        let mut act = p.tensor().clone();
        let mut v = act.get(i, a).clone();
        v[b] = &v[b] + &f.int(num);
        act.set(i, a, v);
        let bad = PartialAction::new(p.hopf().clone(), p.algebra().clone(), act).unwrap();
        let (rep, _) = bad.verify();
        prop_assert!(!rep.all_passed());
        if let Some(c) = rep.find("(i) h·(ab) = Σ (h₁·a)(h₂·b)") {
            if let Some(w) = c.witness.as_ref().filter(|_| c.status == partial_hopf::report::Status::Fail) {
                let (h, x, y) = (w.indices[0], bad.algebra().basis(w.indices[1]), bad.algebra().basis(w.indices[2]));
                let lhs = bad.act_basis(h, &bad.algebra().mul(&x, &y));
                let mut rhs = bad.algebra().zero();
                for (p1, q1, c) in bad.hopf().delta_terms(h) {
                    let term = bad.algebra().mul(&bad.act_basis(p1, &x), &bad.act_basis(q1, &y));
                    partial_hopf::linalg::add_scaled(&mut rhs, c, &term);
                }
                prop_assert_ne!(lhs, rhs);
            }
        }
    }

    #[test]
    fn random_documents_round_trip(f in field(), n in 1usize..4, seed in prop::collection::vec(-4i64..5, 64)) {
        let mut k = 0;
        let mut next = || { k += 1; f.int(seed[k % seed.len()]) };
        let mult = Tensor3::from_fn(f, n, n, n, |_, _| (0..n).map(|_| next()).collect());
        let unit: Vector = (0..n).map(|_| next()).collect();
        let names = (0..n).map(|i| format!("a{i}")).collect();
        let mut d = Document::new(f);
        d.algebra = Some(Algebra::new(mult, unit, names).unwrap());
        d.name = Some("random".into());
        let text = d.to_json();
        let back = Document::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back, d);
    }

    #[test]
    fn catalog_documents_round_trip(pick in 0usize..NAMES.len(), f in prop_oneof![Just(Field::Rational), Just(Field::prime(5).unwrap())]) {
        let d = catalog(NAMES[pick], &Params { field: f, ..Params::default() }).unwrap();
        let back = Document::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.partial_action().unwrap(), d.partial_action().unwrap());
    }
}
