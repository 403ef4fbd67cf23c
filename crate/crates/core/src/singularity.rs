//! Local invariants of plane curve singularities.
//!
//! Characteristic polynomials of the Milnor monodromy are returned as
//! [`CyclotomicProduct`]s. All germs handled here have finite-order
//! monodromy, so the remainder is always trivial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::cyclotomic::coprime_quotient;
use crate::algebra::gcd;
use crate::error::{Error, Result};
use crate::CyclotomicProduct;

/// Puiseux characteristic pairs `(k_i, n_i)`.
///
/// The germ is `y = x^{k_1/n_1} + x^{k_1/n_1 + k_2/(n_1 n_2)} + …`: each `k_i`
/// is the increment of the exponent, measured in units of `1/(n_1⋯n_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u64, u64)>", into = "Vec<(u64, u64)>")]
pub struct PuiseuxCharacteristic {
    pairs: Vec<(u64, u64)>,
}

impl PuiseuxCharacteristic {
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        let Some(&(k1, n1)) = pairs.first() else {
            return Err(Error::precondition("at least one characteristic pair is required"));
        };
        for (i, &(k, n)) in pairs.iter().enumerate() {
            if n < 2 {
                return Err(Error::precondition(format!(
                    "pair {}: n = {n} must be at least 2",
                    i + 1
                )));
            }
            if k == 0 || gcd(k, n) != 1 {
                return Err(Error::precondition(format!(
                    "pair {}: ({k}, {n}) must be coprime with k positive",
                    i + 1
                )));
            }
        }
        if k1 <= n1 {
            return Err(Error::precondition(format!(
                "first pair ({k1}, {n1}) must have k > n"
            )));
        }
        let pc = PuiseuxCharacteristic { pairs };
        // Everything downstream multiplies these; refuse inputs that overflow.
        pc.checked_weights()
            .and_then(|_| pc.checked_exponents())
            .ok_or_else(|| Error::precondition("characteristic data overflows 64-bit integers"))?;
        Ok(pc)
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Multiplicity of the germ, `n_1 ⋯ n_g`.
    pub fn multiplicity(&self) -> u64 {
        self.pairs.iter().map(|p| p.1).product()
    }

    fn tail_product(&self, i: usize) -> Option<u64> {
        self.pairs[i + 1..]
            .iter()
            .try_fold(1u64, |acc, p| acc.checked_mul(p.1))
    }

    fn checked_weights(&self) -> Option<Vec<u64>> {
        let mut w = Vec::with_capacity(self.pairs.len());
        w.push(self.pairs[0].0);
        for i in 1..self.pairs.len() {
            let prev = w[i - 1]
                .checked_mul(self.pairs[i - 1].1)?
                .checked_mul(self.pairs[i].1)?
                .checked_add(self.pairs[i].0)?;
            w.push(prev);
        }
        // the formula later forms w_i · n_i · N_i
        for (i, wi) in w.iter().enumerate() {
            wi.checked_mul(self.pairs[i].1)?
                .checked_mul(self.tail_product(i)?)?;
        }
        Some(w)
    }

    fn checked_exponents(&self) -> Option<(u64, Vec<u64>)> {
        let n = self.multiplicity();
        let mut betas = Vec::with_capacity(self.pairs.len());
        let mut acc = 0u64;
        for (i, &(k, _)) in self.pairs.iter().enumerate() {
            acc = acc.checked_add(k.checked_mul(self.tail_product(i)?)?)?;
            betas.push(acc);
        }
        Some((n, betas))
    }

    /// Splice weights: `w_1 = k_1`, `w_{i+1} = w_i n_i n_{i+1} + k_{i+1}`.
    pub fn weights(&self) -> Vec<u64> {
        self.checked_weights().expect("validated at construction")
    }

    /// Characteristic exponents `(n; β_1, …, β_g)` with the germ
    /// parametrized as `x = τ^n`, `y = Σ τ^{β_i}`.
    pub fn characteristic_exponents(&self) -> (u64, Vec<u64>) {
        self.checked_exponents().expect("validated at construction")
    }
}

impl TryFrom<Vec<(u64, u64)>> for PuiseuxCharacteristic {
    type Error = Error;
    fn try_from(pairs: Vec<(u64, u64)>) -> Result<Self> {
        Self::new(pairs)
    }
}

impl From<PuiseuxCharacteristic> for Vec<(u64, u64)> {
    fn from(pc: PuiseuxCharacteristic) -> Self {
        pc.pairs
    }
}

/// Simple (ADE) singularity types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl AdeType {
    pub fn new_a(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::precondition("A_m needs m >= 1"));
        }
        Ok(AdeType::A(m))
    }

    pub fn new_d(n: u32) -> Result<Self> {
        if n < 4 {
            return Err(Error::precondition("D_n needs n >= 4"));
        }
        Ok(AdeType::D(n))
    }

    /// Number of branches of the germ.
    pub fn branches(&self) -> u32 {
        match self {
            AdeType::A(m) if m % 2 == 0 => 1,
            AdeType::A(_) => 2,
            AdeType::D(n) if n % 2 == 0 => 3,
            AdeType::D(_) => 2,
            AdeType::E6 | AdeType::E8 => 1,
            AdeType::E7 => 2,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(m) => write!(f, "A{m}"),
            AdeType::D(n) => write!(f, "D{n}"),
            AdeType::E6 => write!(f, "E6"),
            AdeType::E7 => write!(f, "E7"),
            AdeType::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| *c != '_').collect();
        let mut chars = cleaned.chars();
        let letter = chars.next().map(|c| c.to_ascii_uppercase());
        let index: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::precondition(format!("unknown singularity type {s:?}")))?;
        match (letter, index) {
            (Some('A'), m) => Self::new_a(m),
            (Some('D'), n) => Self::new_d(n),
            (Some('E'), 6) => Ok(AdeType::E6),
            (Some('E'), 7) => Ok(AdeType::E7),
            (Some('E'), 8) => Ok(AdeType::E8),
            _ => Err(Error::precondition(format!("unknown singularity type {s:?}"))),
        }
    }
}

/// A plane curve germ the crate knows how to handle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SingularityDescriptor {
    /// `u^p = v^q` with `gcd(p, q) = 1`.
    OnePair { p: u64, q: u64 },
    Puiseux(PuiseuxCharacteristic),
    Ade(AdeType),
}

impl SingularityDescriptor {
    pub fn one_pair(p: u64, q: u64) -> Result<Self> {
        check_one_pair(p, q)?;
        Ok(SingularityDescriptor::OnePair { p, q })
    }

    pub fn charpoly(&self) -> Result<CyclotomicProduct> {
        match self {
            SingularityDescriptor::OnePair { p, q } => charpoly_one_pair(*p, *q),
            SingularityDescriptor::Puiseux(pc) => charpoly_puiseux(pc),
            SingularityDescriptor::Ade(t) => charpoly_ade(*t),
        }
    }

    pub fn is_unibranched(&self) -> bool {
        match self {
            SingularityDescriptor::OnePair { .. } | SingularityDescriptor::Puiseux(_) => true,
            SingularityDescriptor::Ade(t) => t.branches() == 1,
        }
    }

    /// Ordinary double point.
    pub fn is_node(&self) -> bool {
        matches!(self, SingularityDescriptor::Ade(AdeType::A(1)))
    }

    /// The unordered pair `{p, q}` (smaller first) when the germ is
    /// topologically `u^p = v^q`.
    pub fn as_one_pair(&self) -> Option<(u64, u64)> {
        let (p, q) = match self {
            SingularityDescriptor::OnePair { p, q } => (*p, *q),
            SingularityDescriptor::Puiseux(pc) if pc.len() == 1 => pc.pairs()[0],
            SingularityDescriptor::Ade(AdeType::A(m)) if m % 2 == 0 => (2, *m as u64 + 1),
            SingularityDescriptor::Ade(AdeType::E6) => (3, 4),
            SingularityDescriptor::Ade(AdeType::E8) => (3, 5),
            _ => return None,
        };
        Some((p.min(q), p.max(q)))
    }
}

impl fmt::Display for SingularityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityDescriptor::OnePair { p, q } => write!(f, "u^{p} = v^{q}"),
            SingularityDescriptor::Puiseux(pc) => {
                write!(f, "Puiseux")?;
                for (k, n) in pc.pairs() {
                    write!(f, " ({k},{n})")?;
                }
                Ok(())
            }
            SingularityDescriptor::Ade(t) => write!(f, "{t}"),
        }
    }
}

fn check_one_pair(p: u64, q: u64) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(Error::precondition(format!("({p}, {q}): both exponents must be at least 2")));
    }
    if gcd(p, q) != 1 {
        return Err(Error::precondition(format!("({p}, {q}) are not coprime")));
    }
    if p.checked_mul(q).is_none() {
        return Err(Error::precondition(format!("({p}, {q}) overflows")));
    }
    Ok(())
}

/// `Δ_{p,q}(t) = (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1))`.
pub fn charpoly_one_pair(p: u64, q: u64) -> Result<CyclotomicProduct> {
    check_one_pair(p, q)?;
    coprime_quotient(p, q, 1)
}

/// Characteristic polynomial of `x^p + y^q` for arbitrary `p, q ≥ 1`:
/// `(t^{lcm}-1)^{gcd} (t-1) / ((t^p-1)(t^q-1))`.
pub fn brieskorn_charpoly(p: u64, q: u64) -> Result<CyclotomicProduct> {
    if p == 0 || q == 0 {
        return Err(Error::precondition("exponents must be positive"));
    }
    let g = gcd(p, q);
    CyclotomicProduct::from_binomial_exponents([
        (p / g * q, g as i64),
        (1, 1),
        (p, -1),
        (q, -1),
    ])
}

/// `Π_i Δ_{w_i, n_i}(t^{N_i})` with `N_i = n_{i+1}⋯n_g`.
pub fn charpoly_puiseux(pc: &PuiseuxCharacteristic) -> Result<CyclotomicProduct> {
    let weights = pc.weights();
    let mut out = CyclotomicProduct::one();
    for (i, (&(_, n), &w)) in pc.pairs().iter().zip(weights.iter()).enumerate() {
        let tail: u64 = pc.pairs()[i + 1..].iter().map(|p| p.1).product();
        out = out.mul(&coprime_quotient(w, n, tail)?);
    }
    Ok(out)
}

/// Spectrum numbers in `(0, 1)` of `u^p = v^q`: `i/p + j/q` for
/// `0 < i < p`, `0 < j < q`, sorted ascending.
pub fn spectrum_one_pair(p: u64, q: u64) -> Result<Vec<Rational64>> {
    check_one_pair(p, q)?;
    let (pi, qi) = (p as i64, q as i64);
    let one = Rational64::from_integer(1);
    let mut out: Vec<Rational64> = (1..pi)
        .flat_map(|i| (1..qi).map(move |j| Rational64::new(i, pi) + Rational64::new(j, qi)))
        .filter(|a| *a < one)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Tabulated characteristic polynomials of the simple singularities.
pub fn charpoly_ade(t: AdeType) -> Result<CyclotomicProduct> {
    match t {
        AdeType::A(m) => brieskorn_charpoly(2, m as u64 + 1),
        AdeType::D(n) => {
            // (t^{n-1} + (-1)^{n-1}) (t - 1)
            let k = n as u64 - 1;
            if k % 2 == 1 {
                CyclotomicProduct::from_binomial_exponents([(k, 1), (1, 1)])
            } else {
                CyclotomicProduct::from_binomial_exponents([(2 * k, 1), (k, -1), (1, 1)])
            }
        }
        AdeType::E6 => charpoly_one_pair(3, 4),
        AdeType::E8 => charpoly_one_pair(3, 5),
        // x^3 + x y^3, weights (1/3, 2/9): (t^9 - 1)(t - 1)/(t^3 - 1)
        AdeType::E7 => CyclotomicProduct::from_binomial_exponents([(9, 1), (1, 1), (3, -1)]),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CmStatus {
    CmByUnibranched,
    CmByCriterion,
    CriterionInapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmWitness {
    /// `(n, e)` for every `Φ_n`, `n > 1`, occurring with exponent `e ≥ 2`.
    pub multiple_roots: Vec<(u64, u32)>,
    /// Whether the non-cyclotomic remainder is squarefree.
    pub remainder_squarefree: bool,
    pub value_at_minus_one: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmVerdict {
    pub status: CmStatus,
    pub witness: CmWitness,
}

fn witness(poly: &CyclotomicProduct) -> CmWitness {
    let multiple_roots = poly
        .factors()
        .iter()
        .filter(|(n, e)| **n > 1 && **e >= 2)
        .map(|(n, e)| (*n, *e))
        .collect();
    let remainder_squarefree = poly.remainder().to_rational().is_squarefree();
    CmWitness {
        multiple_roots,
        remainder_squarefree,
        value_at_minus_one: poly.value_at_minus_one(),
    }
}

/// The semisimplicity criterion on a characteristic polynomial: no
/// multiple roots other than 1 and `Δ(-1) ≠ 0`.
pub fn cm_criterion(poly: &CyclotomicProduct) -> CmVerdict {
    let witness = witness(poly);
    let status = if witness.multiple_roots.is_empty()
        && witness.remainder_squarefree
        && !witness.value_at_minus_one.is_zero()
    {
        CmStatus::CmByCriterion
    } else {
        CmStatus::CriterionInapplicable
    };
    CmVerdict { status, witness }
}

/// Unibranched germs always have CM type; other germs go through
/// [`cm_criterion`].
pub fn cm_verdict(s: &SingularityDescriptor) -> Result<CmVerdict> {
    let poly = s.charpoly()?;
    if s.is_unibranched() {
        return Ok(CmVerdict {
            status: CmStatus::CmByUnibranched,
            witness: witness(&poly),
        });
    }
    Ok(cm_criterion(&poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::product_of;
    use crate::algebra::{lcm, euler_phi};
    use crate::{factor_cyclotomic, IntPolynomial};
    use std::collections::BTreeMap;

    fn pc(pairs: &[(u64, u64)]) -> PuiseuxCharacteristic {
        PuiseuxCharacteristic::new(pairs.to_vec()).unwrap()
    }

    #[test]
    fn one_pair_examples() {
        assert_eq!(charpoly_one_pair(2, 3).unwrap(), product_of(&[(6, 1)]));
        assert_eq!(charpoly_one_pair(2, 5).unwrap(), product_of(&[(10, 1)]));
        assert_eq!(charpoly_one_pair(3, 2).unwrap(), product_of(&[(6, 1)]));
        assert!(charpoly_one_pair(2, 4).is_err());
        assert!(charpoly_one_pair(1, 5).is_err());
    }

    #[test]
    fn one_pair_degree_is_milnor_number() {
        for p in 2..=30u64 {
            for q in 2..=30u64 {
                if gcd(p, q) != 1 {
                    continue;
                }
                let d = charpoly_one_pair(p, q).unwrap();
                assert_eq!(d.degree() as u64, (p - 1) * (q - 1));
                assert!(d.is_cyclotomic());
            }
        }
    }

    #[test]
    fn puiseux_two_pair_examples() {
        let d = charpoly_puiseux(&pc(&[(3, 2), (6, 5)])).unwrap();
        // [t^10 - t^5 + 1] · (t^180 - 1)(t - 1) / ((t^36 - 1)(t^5 - 1))
        let first = IntPolynomial::from_i64(&[1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1]);
        let num = IntPolynomial::binomial(180).mul_binomial(1);
        let second = num
            .div_binomial(36)
            .and_then(|p| p.div_binomial(5))
            .unwrap();
        assert_eq!(d.expand(), &first * &second);

        let d = charpoly_puiseux(&pc(&[(3, 2), (1, 2)])).unwrap();
        assert_eq!(d, product_of(&[(12, 1), (26, 1)]));
    }

    #[test]
    fn puiseux_single_pair_reduces_to_one_pair() {
        for (k, n) in [(3, 2), (5, 2), (7, 3), (11, 4)] {
            assert_eq!(
                charpoly_puiseux(&pc(&[(k, n)])).unwrap(),
                charpoly_one_pair(k, n).unwrap()
            );
        }
    }

    #[test]
    fn puiseux_validation() {
        assert!(PuiseuxCharacteristic::new(vec![]).is_err());
        assert!(PuiseuxCharacteristic::new(vec![(2, 3)]).is_err());
        assert!(PuiseuxCharacteristic::new(vec![(4, 2)]).is_err());
        assert!(PuiseuxCharacteristic::new(vec![(3, 2), (2, 4)]).is_err());
        assert!(PuiseuxCharacteristic::new(vec![(3, 2), (1, 1)]).is_err());
        assert!(PuiseuxCharacteristic::new(vec![(u64::MAX, 2), (1, 3)]).is_err());
    }

    #[test]
    fn characteristic_exponents_match_convention() {
        // y = x^{3/2} + x^{21/10}
        assert_eq!(pc(&[(3, 2), (6, 5)]).characteristic_exponents(), (10, vec![15, 21]));
        // y = x^{3/2} + x^{7/4}
        assert_eq!(pc(&[(3, 2), (1, 2)]).characteristic_exponents(), (4, vec![6, 7]));
        assert_eq!(pc(&[(3, 2), (6, 5)]).weights(), vec![3, 36]);
    }

    fn spectrum_brute_force(p: u64, q: u64) -> Vec<Rational64> {
        let mut v = Vec::new();
        for i in 1..p as i64 {
            for j in 1..q as i64 {
                let a = Rational64::new(i * q as i64 + j * p as i64, (p * q) as i64);
                if a < Rational64::from_integer(1) && !v.contains(&a) {
                    v.push(a);
                }
            }
        }
        v.sort();
        v
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(spectrum_one_pair(2, 3).unwrap(), vec![Rational64::new(5, 6)]);
        assert_eq!(
            spectrum_one_pair(2, 5).unwrap(),
            vec![Rational64::new(7, 10), Rational64::new(9, 10)]
        );
        assert_eq!(spectrum_one_pair(3, 4).unwrap(), spectrum_brute_force(3, 4));
        assert_eq!(spectrum_one_pair(3, 4).unwrap().len(), 3);
        assert!(spectrum_one_pair(4, 6).is_err());
    }

    #[test]
    fn spectrum_is_half_of_the_symmetric_set() {
        for p in 2..=30u64 {
            for q in 2..=30u64 {
                if gcd(p, q) != 1 {
                    continue;
                }
                let s = spectrum_one_pair(p, q).unwrap();
                assert_eq!(s.len() as u64, (p - 1) * (q - 1) / 2);
                let one = Rational64::from_integer(1);
                for a in s.iter() {
                    assert!(!s.contains(&(one - a)));
                }
            }
        }
    }

    /// Milnor–Orlik: for weights `w_i = v_i/u_i` the divisor of the
    /// characteristic polynomial is `Π (Λ_{u_i}/v_i - 1)`, with
    /// `Λ_a Λ_b = gcd(a,b) Λ_{lcm(a,b)}` and `Λ_m ↔ t^m - 1`.
    fn milnor_orlik(weights: &[Rational64]) -> CyclotomicProduct {
        let mut divisor: BTreeMap<u64, Rational64> = BTreeMap::new();
        divisor.insert(1, Rational64::from_integer(1));
        for w in weights {
            let (v, u) = (*w.numer() as u64, *w.denom() as u64);
            let mut next: BTreeMap<u64, Rational64> = BTreeMap::new();
            for (a, c) in divisor.iter() {
                let l = lcm(*a, u);
                *next.entry(l).or_insert(Rational64::from_integer(0)) +=
                    *c * Rational64::new(gcd(*a, u) as i64, v as i64);
                *next.entry(*a).or_insert(Rational64::from_integer(0)) -= *c;
            }
            divisor = next;
        }
        let exps: Vec<(u64, i64)> = divisor
            .into_iter()
            .filter(|(_, c)| *c != Rational64::from_integer(0))
            .map(|(m, c)| {
                assert!(c.is_integer(), "Milnor–Orlik divisor has integral coefficients");
                (m, c.to_integer())
            })
            .collect();
        CyclotomicProduct::from_binomial_exponents(exps).unwrap()
    }

    #[test]
    fn ade_table_matches_weighted_homogeneous_oracle() {
        let r = Rational64::new;
        for m in 1..=20u32 {
            let expected = milnor_orlik(&[r(1, m as i64 + 1), r(1, 2)]);
            assert_eq!(charpoly_ade(AdeType::A(m)).unwrap(), expected, "A{m}");
            assert_eq!(expected.degree() as u32, m);
        }
        for n in 4..=20u32 {
            let n1 = n as i64 - 1;
            let expected = milnor_orlik(&[r(n1 - 1, 2 * n1), r(1, n1)]);
            assert_eq!(charpoly_ade(AdeType::D(n)).unwrap(), expected, "D{n}");
            assert_eq!(expected.degree() as u32, n);
        }
        assert_eq!(charpoly_ade(AdeType::E6).unwrap(), milnor_orlik(&[r(1, 3), r(1, 4)]));
        assert_eq!(charpoly_ade(AdeType::E7).unwrap(), milnor_orlik(&[r(1, 3), r(2, 9)]));
        assert_eq!(charpoly_ade(AdeType::E8).unwrap(), milnor_orlik(&[r(1, 3), r(1, 5)]));
        assert_eq!(charpoly_ade(AdeType::E7).unwrap().degree(), 7);
    }

    #[test]
    fn ade_examples() {
        assert_eq!(charpoly_ade(AdeType::A(2)).unwrap(), product_of(&[(6, 1)]));
        // D_4: (t^3 - 1)(t - 1)
        assert_eq!(charpoly_ade(AdeType::D(4)).unwrap(), product_of(&[(1, 2), (3, 1)]));
        // D_5: (t^4 + 1)(t - 1)
        assert_eq!(charpoly_ade(AdeType::D(5)).unwrap(), product_of(&[(1, 1), (8, 1)]));
        assert_eq!(charpoly_ade(AdeType::E7).unwrap(), product_of(&[(1, 1), (9, 1)]));
        // A_{2k} agrees with Δ_{2,2k+1}
        for k in 1..10u64 {
            assert_eq!(
                charpoly_ade(AdeType::A(2 * k as u32)).unwrap(),
                charpoly_one_pair(2, 2 * k + 1).unwrap()
            );
        }
    }

    #[test]
    fn ade_parsing() {
        assert_eq!("A2".parse::<AdeType>().unwrap(), AdeType::A(2));
        assert_eq!("d_4".parse::<AdeType>().unwrap(), AdeType::D(4));
        assert_eq!("E7".parse::<AdeType>().unwrap(), AdeType::E7);
        assert!("D3".parse::<AdeType>().is_err());
        assert!("E9".parse::<AdeType>().is_err());
        assert!("X1".parse::<AdeType>().is_err());
    }

    #[test]
    fn cm_verdicts() {
        let cusp = SingularityDescriptor::one_pair(2, 3).unwrap();
        assert_eq!(cm_verdict(&cusp).unwrap().status, CmStatus::CmByUnibranched);

        let two_pair = SingularityDescriptor::Puiseux(pc(&[(3, 2), (6, 5)]));
        let v = cm_verdict(&two_pair).unwrap();
        assert_eq!(v.status, CmStatus::CmByUnibranched);
        assert!(v.witness.multiple_roots.iter().any(|(n, _)| *n == 30));
        // the criterion alone would not have applied
        let raw = cm_criterion(&two_pair.charpoly().unwrap());
        assert_eq!(raw.status, CmStatus::CriterionInapplicable);

        // ordinary 4-fold point: (t-1)^3 (t^2+1)^2 (t+1)^2
        let poly = &(&IntPolynomial::from_i64(&[-1, 1]).pow(3)
            * &IntPolynomial::from_i64(&[1, 0, 1]).pow(2))
            * &IntPolynomial::from_i64(&[1, 1]).pow(2);
        let v = cm_criterion(&factor_cyclotomic(&poly).unwrap());
        assert_eq!(v.status, CmStatus::CriterionInapplicable);
        assert!(v.witness.value_at_minus_one.is_zero());
        assert_eq!(v.witness.multiple_roots, vec![(2, 2), (4, 2)]);

        let d4 = SingularityDescriptor::Ade(AdeType::D(4));
        let v = cm_verdict(&d4).unwrap();
        assert_eq!(v.status, CmStatus::CmByCriterion);
        assert_eq!(v.witness.value_at_minus_one, BigInt::from(4));

        // A_3: Φ_1·Φ_4, two branches but semisimple with Δ(-1) = -4
        let a3 = SingularityDescriptor::Ade(AdeType::A(3));
        assert_eq!(cm_verdict(&a3).unwrap().status, CmStatus::CmByCriterion);
        // D_5: Φ_1·Φ_8
        let d5 = SingularityDescriptor::Ade(AdeType::D(5));
        assert_eq!(cm_verdict(&d5).unwrap().status, CmStatus::CmByCriterion);
    }

    #[test]
    fn one_pair_views() {
        let e8 = SingularityDescriptor::Ade(AdeType::E8);
        assert_eq!(e8.as_one_pair(), Some((3, 5)));
        assert_eq!(SingularityDescriptor::one_pair(3, 2).unwrap().as_one_pair(), Some((2, 3)));
        assert_eq!(SingularityDescriptor::Ade(AdeType::D(5)).as_one_pair(), None);
        assert!(SingularityDescriptor::Ade(AdeType::A(1)).is_node());
        let phi: u64 = charpoly_ade(AdeType::E8)
            .unwrap()
            .factors()
            .iter()
            .map(|(n, e)| euler_phi(*n) * *e as u64)
            .sum();
        assert_eq!(phi, 8);
    }
}
