//! Named example actions.

use crate::algebra::Algebra;
use crate::document::{Construction, Document, GroupBlock, GroupSpec};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::HopfAlgebra;
use crate::linalg::{basis_vector, zero_vector, Matrix, Subspace, Tensor3, Vector};
use crate::paction::{from_partial_group_action, induce_partial, PartialAction};
use crate::scalar::{Field, Scalar};

pub const NAMES: [&str; 7] = ["trivial", "ex-null", "ex-sw", "ex-dg", "group-algebra", "dual-group-algebra", "sweedler"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub field: Field,
    pub alpha: Option<String>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    /// `kC<n>`, `kC<n>*`, `H4` or `H4*`.
    pub hopf: Option<String>,
    /// `k`, `H`, `kC<n>` or `k^<n>`.
    pub algebra: Option<String>,
}

impl Default for Params {
    fn default() -> Params {
        Params { field: Field::Rational, alpha: None, n: None, m: None, hopf: None, algebra: None }
    }
}

pub fn catalog(name: &str, params: &Params) -> Result<Document> {
    let f = params.field;
    let doc = match name {
        "trivial" => {
            let h = hopf_by_name(f, params.hopf.as_deref().unwrap_or("kC2"))?;
            let a = algebra_by_name(f, params.algebra.as_deref().unwrap_or("H"), &h)?;
            Document::from_action(name, &PartialAction::trivial(h, a))
        }
        "ex-null" => Document::from_action(name, &ex_null(f, params.n.unwrap_or(2))?),
        "ex-sw" => {
            let alpha = f.parse(params.alpha.as_deref().unwrap_or("1")).map_err(|_| Error::Catalog(format!("α = {:?} is not an element of {}", params.alpha.as_deref().unwrap_or(""), f.name())))?;
            Document::from_action(name, &ex_sw(f, &alpha)?)
        }
        "ex-dg" => Document::from_action(name, &ex_dg(f, params.n.unwrap_or(4), params.m.unwrap_or(2))?),
        "group-algebra" | "dual-group-algebra" => {
            let n = params.n.unwrap_or(2);
            if n == 0 {
                return Err(Error::Catalog("n must be positive".into()));
            }
            let construction = if name == "group-algebra" { Construction::GroupAlgebra } else { Construction::DualGroupAlgebra };
            let mut d = Document::new(f);
            d.name = Some(name.into());
            d.group = Some(GroupBlock { spec: GroupSpec::Abelian(vec![n]), construction });
            d
        }
        "sweedler" => {
            if f.characteristic() == 2 {
                return Err(Error::Catalog("the Sweedler algebra needs characteristic ≠ 2".into()));
            }
            let mut d = Document::new(f);
            d.name = Some(name.into());
            d.hopf = Some(HopfAlgebra::sweedler(f));
            d
        }
        other => return Err(Error::Catalog(format!("unknown example {other:?}; known: {}", NAMES.join(", ")))),
    };
    Ok(doc)
}

/// Parses `kC<n>`, `kC<n>*`, `H4` and `H4*`.
pub fn hopf_by_name(f: Field, name: &str) -> Result<HopfAlgebra> {
    let bad = || Error::Catalog(format!("unknown Hopf algebra {name:?}"));
    match name {
        "H4" => Ok(HopfAlgebra::sweedler(f)),
        "H4*" => Ok(HopfAlgebra::sweedler(f).dual()),
        _ => {
            let rest = name.strip_prefix("kC").ok_or_else(bad)?;
            let (num, dual) = match rest.strip_suffix('*') {
                Some(r) => (r, true),
                None => (rest, false),
            };
            let g = Group::cyclic(num.parse().map_err(|_| bad())?)?;
            Ok(if dual { HopfAlgebra::dual_group_algebra(f, &g) } else { HopfAlgebra::group_algebra(f, &g) })
        }
    }
}

/// Parses `k`, `H` (the algebra underlying `h`), `kC<n>` and `k^<n>`.
pub fn algebra_by_name(f: Field, name: &str, h: &HopfAlgebra) -> Result<Algebra> {
    let bad = || Error::Catalog(format!("unknown algebra {name:?}"));
    match name {
        "k" => Ok(Algebra::ground(f)),
        "H" => Ok(h.algebra().clone()),
        _ => {
            if let Some(n) = name.strip_prefix("k^") {
                return Ok(Algebra::diagonal(f, n.parse().map_err(|_| bad())?));
            }
            let n = name.strip_prefix("kC").ok_or_else(bad)?.parse().map_err(|_| bad())?;
            Ok(HopfAlgebra::group_algebra(f, &Group::cyclic(n)?).algebra().clone())
        }
    }
}

/// The global action `p_g ▷ h = δ_{g,h} h` of `kG*` on `kG`.
pub fn dual_group_global(f: Field, g: &Group) -> PartialAction {
    let n = g.order();
    let h = HopfAlgebra::dual_group_algebra(f, g);
    let a = HopfAlgebra::group_algebra(f, g).algebra().clone();
    let act = Tensor3::from_fn(f, n, n, n, |i, x| if i == x { basis_vector(f, n, x) } else { zero_vector(f, n) });
    PartialAction::new(h, a, act).expect("shapes agree")
}

/// `e_N = |N|⁻¹ Σ_{x ∈ N} x` in `kG`.
pub fn subgroup_idempotent(f: Field, g: &Group, subgroup: &[usize]) -> Result<Vector> {
    let size = subgroup.len() as i64;
    if !f.is_unit_int(size) {
        return Err(Error::Catalog(format!("char {} divides |N| = {size}", f.characteristic())));
    }
    let c = f.ratio(1, size)?;
    let mut v = zero_vector(f, g.order());
    for &x in subgroup {
        v[x] = c.clone();
    }
    Ok(v)
}

/// `kC_n*` acting partially on `e_N kC_n` with `N = ⟨g^m⟩`.
pub fn ex_dg(f: Field, n: usize, m: usize) -> Result<PartialAction> {
    if n == 0 || m == 0 || !n.is_multiple_of(m) {
        return Err(Error::Catalog(format!("m = {m} must be a positive divisor of n = {n}")));
    }
    let g = Group::cyclic(n)?;
    let sub = g.generated(&[m % n]);
    let e = subgroup_idempotent(f, &g, &sub)?;
    let global = dual_group_global(f, &g);
    let p = induce_partial(&global, &e)?;
    // Rebase to e_N, e_N g, …, e_N g^{m-1}.
    let b = global.algebra();
    let ideal = Subspace::span(f, n, &(0..n).map(|x| b.mul(&e, &b.basis(x))).collect::<Vec<_>>());
    let cols: Vec<Vector> = (0..m).map(|k| ideal.coordinates(&b.mul(&e, &b.basis(k))).expect("e_N g^k lies in e_N kG")).collect();
    let names = (0..m).map(|k| if k == 0 { "e_N".to_string() } else { format!("e_N {}", g.labels()[k]) }).collect();
    p.rebase_algebra(&Matrix::from_columns(f, m, &cols), names)
}

/// `kC_n` acting on `k` with `D_g = 0` for every `g ≠ 1`.
pub fn ex_null(f: Field, n: usize) -> Result<PartialAction> {
    if n < 2 {
        return Err(Error::Catalog("ex-null needs n ≥ 2".into()));
    }
    let g = Group::cyclic(n)?;
    let k = Algebra::ground(f);
    let domains: Vec<Vector> = (0..n).map(|x| vec![if x == g.identity() { f.one() } else { f.zero() }]).collect();
    let maps: Vec<Matrix> = (0..n).map(|x| if x == g.identity() { Matrix::identity(f, 1) } else { Matrix::zeros(f, 1, 1) }).collect();
    from_partial_group_action(&g, &k, &domains, &maps)
}

/// The dual of the Sweedler algebra, with dual basis `e1, e2, h1, h2`,
/// acting on `k` by evaluation at `e = ½ + ½g − α·xg`.
pub fn ex_sw(f: Field, alpha: &Scalar) -> Result<PartialAction> {
    if f.characteristic() == 2 {
        return Err(Error::Catalog("ex-sw needs characteristic ≠ 2".into()));
    }
    let names = ["e1", "e2", "h1", "h2"].iter().map(|s| s.to_string()).collect();
    let h = HopfAlgebra::sweedler(f).dual().with_names(names)?;
    let half = f.ratio(1, 2)?;
    let e = [half.clone(), half, f.zero(), -alpha.clone()];
    let act = Tensor3::from_fn(f, 4, 1, 1, |i, _| vec![e[i].clone()]);
    PartialAction::new(h, Algebra::ground(f), act)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for name in NAMES {
            let d = catalog(name, &Params::default()).unwrap();
            let p = d.partial_action().unwrap();
            assert!(p.verify().0.all_passed(), "{name}");
        }
    }

    #[test]
    fn bad_parameters() {
        let p = Params { n: Some(4), m: Some(3), ..Params::default() };
        assert!(matches!(catalog("ex-dg", &p), Err(Error::Catalog(_))));
        let p = Params { field: Field::prime(2).unwrap(), ..Params::default() };
        assert!(matches!(catalog("ex-dg", &p), Err(Error::Catalog(_))));
        assert!(matches!(catalog("ex-sw", &p), Err(Error::Catalog(_))));
        let p = Params { alpha: Some("1/0".into()), ..Params::default() };
        assert!(matches!(catalog("ex-sw", &p), Err(Error::Catalog(_))));
        assert!(catalog("nope", &Params::default()).is_err());
    }

    #[test]
    fn ex_dg_shape() {
        let p = ex_dg(Field::Rational, 4, 2).unwrap();
        assert_eq!(p.adim(), 2);
        assert_eq!(p.algebra().names(), ["e_N", "e_N g"]);
        assert_eq!(p.algebra().unit(), &vec![Field::Rational.one(), Field::Rational.zero()]);
        assert_eq!(p.hopf().names(), ["p_1", "p_g", "p_g^2", "p_g^3"]);
    }
}
