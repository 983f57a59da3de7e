//! Cohen-Macaulay and generalized Cohen-Macaulay classification of
//! polymatroidal ideals.
//!
//! A polymatroidal ideal is CM exactly when it is principal, Veronese or
//! squarefree Veronese. An ideal is generalized CM when it is equidimensional
//! and every monomial localization `I(p)`, `p ≠ m`, is CM.

use serde::Serialize;

use crate::decompose::{is_equidimensional, is_unmixed, primary_decomposition};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, VarMask};
use crate::localize::killing;
use crate::oracle::homology::Field;
use crate::oracle::reisner::is_cm_reisner;
use crate::polymatroid::{is_matroidal, is_polymatroidal, recognize_cm_shape};
use crate::text::render_ideal;

fn require_polymatroidal(ideal: &MonomialIdeal) -> Result<()> {
    if is_polymatroidal(ideal)?.holds() {
        Ok(())
    } else {
        Err(Error::NotPolymatroidal)
    }
}

pub fn is_cm_polymatroidal(ideal: &MonomialIdeal) -> Result<bool> {
    require_polymatroidal(ideal)?;
    Ok(recognize_cm_shape(ideal)?.is_cm())
}

/// A localization that is not Cohen-Macaulay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalizationWitness {
    pub killed: Vec<String>,
    pub prime: Vec<String>,
    pub localization: String,
    #[serde(skip)]
    pub killed_mask: VarMask,
    #[serde(skip)]
    pub ideal: MonomialIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcmVerdict {
    pub generalized_cm: bool,
    pub equidimensional: bool,
    /// First failing localization, sweeping kill sets by size then mask.
    pub witness: Option<LocalizationWitness>,
    /// Every failing localization, in sweep order.
    pub failures: Vec<LocalizationWitness>,
}

/// Sweeps all `2^n - 2` proper nonempty kill sets and tests each localization with `is_cm`.
/// Unit localizations count as CM.
pub fn generalized_cm_with<F>(ideal: &MonomialIdeal, mut is_cm: F) -> Result<GcmVerdict>
where
    F: FnMut(&MonomialIdeal) -> Result<bool>,
{
    ideal.ensure_proper()?;
    let equidimensional = is_equidimensional(ideal)?;
    let n = ideal.nvars();
    let full = VarMask::full(n);
    let mut kill_sets: Vec<VarMask> = full.subsets().filter(|k| !k.is_empty() && *k != full).collect();
    kill_sets.sort_by_key(|k| (k.len(), k.0));
    let vars = ideal.vars();
    let mut failures = Vec::new();
    for killed in kill_sets {
        let local = killing(ideal, killed);
        if local.is_unit() || is_cm(&local)? {
            continue;
        }
        failures.push(LocalizationWitness {
            killed: vars.mask_names(killed),
            prime: vars.mask_names(killed.complement(n)),
            localization: render_ideal(&local),
            killed_mask: killed,
            ideal: local,
        });
    }
    Ok(GcmVerdict {
        generalized_cm: equidimensional && failures.is_empty(),
        equidimensional,
        witness: failures.first().cloned(),
        failures,
    })
}

/// gCM for polymatroidal ideals; localizations are polymatroidal, so CM is read off their shape.
pub fn is_generalized_cm(ideal: &MonomialIdeal) -> Result<GcmVerdict> {
    require_polymatroidal(ideal)?;
    generalized_cm_with(ideal, |local| Ok(recognize_cm_shape(local)?.is_cm()))
}

/// gCM with every localization judged by the Reisner oracle; valid for any monomial ideal.
pub fn is_generalized_cm_oracle(ideal: &MonomialIdeal, field: Field) -> Result<GcmVerdict> {
    generalized_cm_with(ideal, |local| Ok(is_cm_reisner(local, field)?.cohen_macaulay))
}

/// The clauses of the classification of gCM polymatroidal ideals `I = J ∩ m^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ThClauses {
    /// `J` is principal, Veronese or squarefree Veronese.
    pub a: bool,
    /// `J` is an equidimensional intersection of prime powers whose primes pairwise sum to `m`.
    pub b: bool,
    /// `J` is an unmixed matroidal ideal of degree 2.
    pub c: bool,
}

impl ThClauses {
    pub fn any(&self) -> bool {
        self.a || self.b || self.c
    }

    pub fn labels(&self) -> Vec<&'static str> {
        [(self.a, "a"), (self.b, "b"), (self.c, "c")].into_iter().filter(|(on, _)| *on).map(|(_, l)| l).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThReport {
    pub degree: u32,
    pub s: u32,
    pub clauses: ThClauses,
    pub polymatroidal: bool,
    pub generalized_cm: bool,
}

impl ThReport {
    /// Some clause holds iff `I` is a gCM polymatroidal ideal.
    pub fn consistent(&self) -> bool {
        self.clauses.any() == (self.polymatroidal && self.generalized_cm)
    }
}

fn clause_b(j: &MonomialIdeal) -> Result<bool> {
    let dec = primary_decomposition(j)?;
    if dec.components.iter().any(|c| c.prime_power_exponent().is_none()) {
        return Ok(false);
    }
    if !is_equidimensional(j)? {
        return Ok(false);
    }
    let full = j.vars().full_mask();
    let primes: Vec<VarMask> = dec.components.iter().map(|c| c.prime.members()).collect();
    Ok(primes
        .iter()
        .enumerate()
        .all(|(a, p)| primes[a + 1..].iter().all(|q| p.union(*q) == full)))
}

fn clause_c(j: &MonomialIdeal) -> Result<bool> {
    Ok(j.single_degree()? == Some(2) && is_matroidal(j)? && is_unmixed(j)?)
}

/// Evaluates the three clauses on `J` and decides whether `I = J ∩ m^s` is gCM polymatroidal.
pub fn theorem_th_classify(j: &MonomialIdeal, s: u32) -> Result<ThReport> {
    j.ensure_proper()?;
    let i = if s == 0 {
        j.clone()
    } else {
        j.intersection(&MonomialIdeal::maximal_power(j.vars().clone(), s))?
    };
    let d = i.require_single_degree()?;
    if !i.is_fully_supported() {
        return Err(Error::NotFullySupported);
    }
    if s != 0 && s != d {
        return Err(Error::InvalidShift { s, d });
    }
    let clauses = ThClauses { a: recognize_cm_shape(j)?.is_cm(), b: clause_b(j)?, c: clause_c(j)? };
    let polymatroidal = is_polymatroidal(&i)?.holds();
    let generalized_cm = polymatroidal && is_generalized_cm(&i)?.generalized_cm;
    Ok(ThReport { degree: d, s, clauses, polymatroidal, generalized_cm })
}

/// Writes a single-degree `I` as `J ∩ m^s`: `J` drops the `m`-primary component
/// and `s = d` when `m` is associated, otherwise `J = I`, `s = 0`. An ideal
/// equal to `m^d` is its own `J` with `s = 0`. `None` when the `m`-primary
/// component is not `m^d`.
pub fn split_maximal_component(ideal: &MonomialIdeal) -> Result<Option<(MonomialIdeal, u32)>> {
    let d = ideal.require_single_degree()?;
    let full = ideal.vars().full_mask();
    let dec = primary_decomposition(ideal)?;
    if !dec.components.iter().any(|c| c.prime.members() == full) {
        return Ok(Some((ideal.clone(), 0)));
    }
    let j = MonomialIdeal::intersect_all(
        ideal.vars(),
        dec.components.iter().filter(|c| c.prime.members() != full).map(|c| &c.ideal),
    )?;
    let power = MonomialIdeal::maximal_power(ideal.vars().clone(), d);
    if j.is_unit() {
        return Ok((power == *ideal).then(|| (ideal.clone(), 0)));
    }
    let back = j.intersection(&power)?;
    Ok((back == *ideal).then_some((j, d)))
}

/// `J · m^{d-t}` next to `J ∩ m^d` for `J` generated in degree `t <= d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapProd {
    pub product: MonomialIdeal,
    pub intersection: MonomialIdeal,
}

impl CapProd {
    pub fn holds(&self) -> bool {
        self.product == self.intersection
    }
}

pub fn cap_prod(j: &MonomialIdeal, d: u32) -> Result<CapProd> {
    let t = j.require_single_degree()?;
    if d < t {
        return Err(Error::WrongDegree { expected: t, found: d });
    }
    let vars = j.vars().clone();
    let product = j.product(&MonomialIdeal::maximal_power(vars.clone(), d - t))?;
    let intersection = j.intersection(&MonomialIdeal::maximal_power(vars, d))?;
    Ok(CapProd { product, intersection })
}

/// For a fully supported degree-2 ideal: polymatroidal next to "distinct associated primes sum to `m`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AkharReport {
    pub pairwise_sums_maximal: bool,
    pub polymatroidal: bool,
    /// Every primary component is a power of its prime.
    pub prime_power_components: bool,
}

impl AkharReport {
    /// Polymatroidal forces the pairwise sums; the converse needs `I` to be an
    /// intersection of prime powers, as `(x1^2, x2^2)` shows.
    pub fn agree(&self) -> bool {
        if self.prime_power_components {
            self.pairwise_sums_maximal == self.polymatroidal
        } else {
            !self.polymatroidal || self.pairwise_sums_maximal
        }
    }
}

pub fn lemma_akhar_check(ideal: &MonomialIdeal) -> Result<AkharReport> {
    let d = ideal.require_single_degree()?;
    if d != 2 {
        return Err(Error::WrongDegree { expected: 2, found: d });
    }
    if !ideal.is_fully_supported() {
        return Err(Error::NotFullySupported);
    }
    let full = ideal.vars().full_mask();
    let dec = primary_decomposition(ideal)?;
    let ass: Vec<VarMask> = dec.components.iter().map(|c| c.prime.members()).collect();
    let pairwise_sums_maximal =
        ass.iter().enumerate().all(|(a, p)| ass[a + 1..].iter().all(|q| p.union(*q) == full));
    Ok(AkharReport {
        pairwise_sums_maximal,
        polymatroidal: is_polymatroidal(ideal)?.holds(),
        prime_power_components: dec.components.iter().all(|c| c.prime_power_exponent().is_some()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::VariableSet;
    use crate::text::parse_ideal;

    fn p(text: &str) -> MonomialIdeal {
        parse_ideal(text).unwrap().ideal
    }

    fn primes_ideal(n: usize, parts: &[(&[usize], u32)]) -> MonomialIdeal {
        let v = VariableSet::indexed(n);
        let ideals: Vec<MonomialIdeal> = parts
            .iter()
            .map(|(m, a)| MonomialIdeal::prime_power(v.clone(), VarMask::from_indices(m.iter().copied()), *a))
            .collect();
        MonomialIdeal::intersect_all(&v, &ideals).unwrap()
    }

    fn three_primes() -> MonomialIdeal {
        primes_ideal(6, &[(&[0, 1, 2, 3], 1), (&[2, 3, 4, 5], 1), (&[0, 1, 4, 5], 1)])
    }

    #[test]
    fn cm_recognition() {
        assert!(is_cm_polymatroidal(&MonomialIdeal::maximal_power(VariableSet::indexed(4), 3)).unwrap());
        let ex = p("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
        assert!(!is_cm_polymatroidal(&ex).unwrap());
        assert!(!is_cm_polymatroidal(&three_primes()).unwrap());
        assert_eq!(is_cm_polymatroidal(&p("(x1*x2, x3*x4)")).unwrap_err(), Error::NotPolymatroidal);
    }

    #[test]
    fn gcm_failures_include_the_killed_x_localization() {
        let ex = p("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
        let v = is_generalized_cm(&ex).unwrap();
        assert!(!v.generalized_cm);
        let expected = p("vars u,x,y,z,w\n(u*y, u*w, y*z, w*z)");
        assert!(v.failures.iter().any(|w| w.killed == ["x"] && w.ideal == expected));
    }

    #[test]
    fn gcm_by_prime_sums() {
        let exam = primes_ideal(3, &[(&[0, 1], 1), (&[1, 2], 2), (&[0, 1, 2], 3)]);
        assert!(is_polymatroidal(&exam).unwrap().holds());
        assert!(is_generalized_cm(&exam).unwrap().generalized_cm);
    }

    #[test]
    fn mixed_example_is_not_gcm() {
        let c2 = p("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
        let v = is_generalized_cm(&c2).unwrap();
        assert!(!v.generalized_cm);
        let expected = p("vars x1,x2,x3\n(x1^2, x1*x2)");
        assert!(v.failures.iter().any(|w| w.killed == ["x3"] && w.ideal == expected));
    }

    #[test]
    fn classification_clauses() {
        let v2 = VariableSet::indexed(2);
        let j = primes_ideal(2, &[(&[0], 1), (&[1], 2)]);
        let r = theorem_th_classify(&j, 4).unwrap();
        assert_eq!(r.clauses, ThClauses { a: true, b: true, c: false });
        assert!(r.consistent() && r.generalized_cm);
        assert_eq!(j.intersection(&MonomialIdeal::maximal_power(v2, 4)).unwrap(), p("(x1*x2^3, x1^2*x2^2)"));

        let j = primes_ideal(3, &[(&[0], 1), (&[1], 1)]);
        let r = theorem_th_classify(&j, 3).unwrap();
        assert_eq!(r.clauses, ThClauses { a: true, b: false, c: true });
        assert!(r.consistent());

        let r = theorem_th_classify(&three_primes(), 0).unwrap();
        assert_eq!(r.clauses, ThClauses { a: false, b: true, c: true });
        assert!(r.consistent() && r.generalized_cm);
    }

    #[test]
    fn classification_preconditions() {
        let j = primes_ideal(3, &[(&[0], 1), (&[1], 1)]);
        assert_eq!(theorem_th_classify(&j, 0).unwrap_err(), Error::NotFullySupported);
        assert_eq!(theorem_th_classify(&p("(x1*x2, x1*x3, x2*x3)"), 1).unwrap_err(), Error::InvalidShift { s: 1, d: 2 });
    }

    #[test]
    fn split_recovers_shift() {
        let c2 = p("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
        let (j, s) = split_maximal_component(&c2).unwrap().unwrap();
        assert_eq!(s, 3);
        assert_eq!(j, primes_ideal(3, &[(&[0], 1), (&[0, 1], 2)]));
        let ex = three_primes();
        assert_eq!(split_maximal_component(&ex).unwrap().unwrap(), (ex.clone(), 0));
        let m2 = p("(x1^2, x1*x2, x2^2)");
        assert_eq!(split_maximal_component(&m2).unwrap().unwrap(), (m2.clone(), 0));
        let r = theorem_th_classify(&m2, 0).unwrap();
        assert!(r.clauses.a && r.generalized_cm && r.consistent());
    }

    #[test]
    fn cap_prod_examples() {
        let v2 = VariableSet::indexed(2);
        let j = MonomialIdeal::prime(v2.clone(), v2.full_mask());
        let c = cap_prod(&j, 3).unwrap();
        assert!(c.holds());
        assert_eq!(c.product, MonomialIdeal::maximal_power(v2, 3));

        let c = cap_prod(&p("vars x1,x2,x3\n(x1*x2)"), 3).unwrap();
        assert!(c.holds());
        assert_eq!(c.product, p("(x1^2*x2, x1*x2^2, x1*x2*x3)"));

        let ex = p("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
        assert_eq!(cap_prod(&ex, 3).unwrap().product, ex);
        assert_eq!(cap_prod(&p("(x1, x2^2)"), 3).unwrap_err(), Error::NotSingleDegree);
    }

    #[test]
    fn akhar_examples() {
        let m2 = MonomialIdeal::maximal_power(VariableSet::indexed(3), 2);
        let r = lemma_akhar_check(&m2).unwrap();
        assert!(r.pairwise_sums_maximal && r.polymatroidal && r.agree());
        let sv = p("(x1*x2, x1*x3, x2*x3)");
        let r = lemma_akhar_check(&sv).unwrap();
        assert!(r.pairwise_sums_maximal && r.polymatroidal && r.prime_power_components);
        let r = lemma_akhar_check(&p("(x1*x2, x3*x4)")).unwrap();
        assert!(!r.pairwise_sums_maximal && !r.polymatroidal && r.agree());
        let r = lemma_akhar_check(&p("(x1^2, x2^2)")).unwrap();
        assert!(r.pairwise_sums_maximal && !r.polymatroidal && !r.prime_power_components && r.agree());
        assert_eq!(lemma_akhar_check(&p("(x1*x2*x3)")).unwrap_err(), Error::WrongDegree { expected: 2, found: 3 });
    }

    #[test]
    fn oracle_gcm_agrees_on_examples() {
        let c2 = p("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
        assert!(!is_generalized_cm_oracle(&c2, Field::Rationals).unwrap().generalized_cm);
        let ex = three_primes();
        assert!(is_generalized_cm_oracle(&ex, Field::Rationals).unwrap().generalized_cm);
    }
}
