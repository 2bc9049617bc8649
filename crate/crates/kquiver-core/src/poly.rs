//! Sparse multivariate Laurent polynomials over the integers.
//!
//! Variables are grouped into alphabets by [`Family`] and ordered by
//! `(family, block, position)`; terms are kept in a canonical graded
//! lexicographic order so serialization is bit-exact across runs.
//! Coefficients are arbitrary-precision integers.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Variable families; the order here is the canonical family order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    Z,
    ZDot,
}

/// An indexed variable. `block` is the alphabet index (unused for the
/// plain `z`/`zd` families, where it stays 0) and `pos` is the 1-based
/// position inside the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub family: Family,
    pub block: u16,
    pub pos: u16,
}

impl VarId {
    pub fn x(block: u16, pos: u16) -> Self {
        VarId { family: Family::X, block, pos }
    }

    pub fn y(block: u16, pos: u16) -> Self {
        VarId { family: Family::Y, block, pos }
    }

    pub fn z(pos: u16) -> Self {
        VarId { family: Family::Z, block: 0, pos }
    }

    pub fn zdot(pos: u16) -> Self {
        VarId { family: Family::ZDot, block: 0, pos }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::X => write!(f, "x[{},{}]", self.block, self.pos),
            Family::Y => write!(f, "y[{},{}]", self.block, self.pos),
            Family::Z => write!(f, "z[{}]", self.pos),
            Family::ZDot => write!(f, "zd[{}]", self.pos),
        }
    }
}

/// A monomial: sorted variable/exponent pairs, no zero exponents.
/// Exponents may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(VarId, i32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId, exp: i32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial { factors: alloc::vec![(v, exp)] }
        }
    }

    pub fn factors(&self) -> &[(VarId, i32)] {
        &self.factors
    }

    pub fn exponent_of(&self, v: VarId) -> i32 {
        match self.factors.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(t) => self.factors[t].1,
            Err(_) => 0,
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.factors.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let mut a = self.factors.iter().peekable();
        let mut b = other.factors.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        factors.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        factors.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        if ea + eb != 0 {
                            factors.push((va, ea + eb));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&(va, ea)), None) => {
                    factors.push((va, ea));
                    a.next();
                }
                (None, Some(&&(vb, eb))) => {
                    factors.push((vb, eb));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { factors }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            factors: self.factors.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    /// Whether `self / other` has no negative exponents.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        other.factors.iter().all(|&(v, e)| self.exponent_of(v) >= e)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded order: total degree first, then lexicographic in the
    /// canonical variable order with the larger exponent winning.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.factors.iter().peekable();
        let mut b = other.factors.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&&(_, eb))) => return 0.cmp(&eb),
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

/// A Laurent polynomial with integer coefficients; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Monomial::one(), BigInt::from(c));
        }
        LaurentPoly { terms }
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        LaurentPoly::term(Monomial::var(v, 1), BigInt::one())
    }

    /// `1 - num/den`, the pervasive cross weight.
    pub fn one_minus_ratio(num: VarId, den: VarId) -> Self {
        let mut p = LaurentPoly::one();
        p.add_term(Monomial::var(num, 1).mul(&Monomial::var(den, -1)), -BigInt::one());
        p
    }

    /// `num/den - 1`, the cross weight with its sign folded in.
    pub fn ratio_minus_one(num: VarId, den: VarId) -> Self {
        let mut p = LaurentPoly::constant(-1);
        p.add_term(Monomial::var(num, 1).mul(&Monomial::var(den, -1)), BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c1)| (m.clone(), c1 * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in self.terms() {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// [`Error::NotDivisible`]. Works by clearing denominators with a
    /// monomial shift, then single-divisor leading-term reduction; the
    /// result is verified by re-multiplication.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let shift_f = self.min_exponent_shift();
        let shift_g = divisor.min_exponent_shift();
        let f = self.mul_term(&shift_f, &BigInt::one());
        let g = divisor.mul_term(&shift_g, &BigInt::one());
        let (lead_g, lead_g_coeff) = g.terms.iter().next_back().expect("divisor nonzero");
        let mut remainder = f;
        let mut quotient = LaurentPoly::zero();
        while let Some((lead_r, lead_r_coeff)) = remainder.terms.iter().next_back() {
            if !lead_r.divisible_by(lead_g) {
                return Err(Error::NotDivisible);
            }
            if !(lead_r_coeff % lead_g_coeff).is_zero() {
                return Err(Error::NotDivisible);
            }
            let q = lead_r_coeff / lead_g_coeff;
            let m = lead_r.mul(&lead_g.inverse());
            quotient.add_term(m.clone(), q.clone());
            let to_subtract = g.mul_term(&m, &q);
            remainder = remainder.sub(&to_subtract);
        }
        // Undo the shifts: self/divisor = q * shift_g / shift_f.
        let quotient = quotient.mul_term(&shift_g.mul(&shift_f.inverse()), &BigInt::one());
        if &quotient.mul(divisor) != self {
            return Err(Error::NotDivisible);
        }
        Ok(quotient)
    }

    /// Monomial `m` with `self * m` free of negative exponents.
    fn min_exponent_shift(&self) -> Monomial {
        let mut mins: BTreeMap<VarId, i32> = BTreeMap::new();
        for (m, _) in self.terms() {
            for &(v, e) in m.factors() {
                let entry = mins.entry(v).or_insert(0);
                if e < *entry {
                    *entry = e;
                }
            }
        }
        Monomial {
            factors: mins
                .into_iter()
                .filter(|&(_, e)| e < 0)
                .map(|(v, e)| (v, -e))
                .collect(),
        }
    }

    /// The Demazure operator acting on positions `i`, `i+1` (1-based) of
    /// the given ordered alphabet:
    /// `f -> (z_{i+1} f - z_i (s_i f)) / (z_{i+1} - z_i)`
    /// where `s_i` swaps the two variables. Computed termwise through the
    /// closed form, so it is always exact, including on Laurent monomials.
    pub fn demazure_op(&self, i: usize, alphabet: &[VarId]) -> LaurentPoly {
        assert!(i >= 1 && alphabet.len() >= i + 1, "alphabet too short for position");
        let za = alphabet[i - 1];
        let zb = alphabet[i];
        let mut out = LaurentPoly::zero();
        for (m, c) in self.terms() {
            let a = m.exponent_of(za);
            let b = m.exponent_of(zb);
            let rest = m.mul(&Monomial::var(za, -a)).mul(&Monomial::var(zb, -b));
            if a <= b {
                for t in a..=b {
                    let m2 = rest.mul(&Monomial::var(za, t)).mul(&Monomial::var(zb, a + b - t));
                    out.add_term(m2, c.clone());
                }
            } else {
                for t in b + 1..=a - 1 {
                    let m2 = rest.mul(&Monomial::var(za, t)).mul(&Monomial::var(zb, a + b - t));
                    out.add_term(m2, -c);
                }
            }
        }
        out
    }

    /// Substitutes 1 for every listed variable.
    pub fn set_ones(&self, vars: &BTreeSet<VarId>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in self.terms() {
            let kept = Monomial {
                factors: m
                    .factors()
                    .iter()
                    .copied()
                    .filter(|(v, _)| !vars.contains(v))
                    .collect(),
            };
            out.add_term(kept, c.clone());
        }
        out
    }

    /// Swaps two variables everywhere.
    pub fn swap_vars(&self, a: VarId, b: VarId) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in self.terms() {
            let factors: Vec<(VarId, i32)> = m
                .factors()
                .iter()
                .map(|&(v, e)| {
                    let v2 = if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    };
                    (v2, e)
                })
                .collect();
            let mut sorted = factors;
            sorted.sort_by_key(|&(v, _)| v);
            out.add_term(Monomial { factors: sorted }, c.clone());
        }
        out
    }

    /// Largest total degree contributed by one family across a term.
    pub fn max_degree_in(&self, family: Family) -> i64 {
        self.terms()
            .map(|(m, _)| {
                m.factors()
                    .iter()
                    .filter(|(v, _)| v.family == family)
                    .map(|&(_, e)| e as i64)
                    .sum::<i64>()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms()
            .flat_map(|(m, _)| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Canonical text form: terms in the canonical monomial order, every
    /// coefficient signed, every exponent printed.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (t, (m, c)) in self.terms().enumerate() {
            if t > 0 {
                out.push(' ');
            }
            if c.is_negative() {
                let _ = write!(out, "-{}", c.magnitude());
            } else {
                let _ = write!(out, "+{}", c);
            }
            for &(v, e) in m.factors() {
                let _ = write!(out, "*{v}^{e}");
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: u16) -> VarId {
        VarId::z(i)
    }

    fn zd(i: u16) -> VarId {
        VarId::zdot(i)
    }

    #[test]
    fn ring_basics() {
        let a = LaurentPoly::one_minus_ratio(z(1), zd(1));
        assert_eq!(a.add(&LaurentPoly::zero()), a);
        let one_minus = LaurentPoly::one().sub(&LaurentPoly::var(z(1)));
        let one_plus = LaurentPoly::one().add(&LaurentPoly::var(z(1)));
        let mut expected = LaurentPoly::one();
        expected.add_term(Monomial::var(z(1), 2), BigInt::from(-1));
        assert_eq!(one_minus.mul(&one_plus), expected);
    }

    #[test]
    fn canonical_text() {
        let p = LaurentPoly::one_minus_ratio(VarId::x(0, 1), VarId::y(1, 1));
        assert_eq!(p.to_text(), "+1 -1*x[0,1]^1*y[1,1]^-1");
        assert_eq!(LaurentPoly::zero().to_text(), "0");
        assert_eq!(LaurentPoly::constant(-3).to_text(), "-3");
    }

    #[test]
    fn exact_div_examples() {
        let f = LaurentPoly::one_minus_ratio(z(1), zd(1));
        assert!(f.exact_div(&f).unwrap().is_one());

        let a = LaurentPoly::one().sub(&LaurentPoly::var(z(1)));
        let b = LaurentPoly::one().sub(&LaurentPoly::var(z(2)));
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a).unwrap(), b);

        let c = LaurentPoly::one().add(&LaurentPoly::var(z(2)));
        assert_eq!(prod.exact_div(&c), Err(Error::NotDivisible));
    }

    #[test]
    fn exact_div_with_laurent_shift() {
        let f = LaurentPoly::one_minus_ratio(z(1), zd(1));
        let g = LaurentPoly::one_minus_ratio(z(2), zd(2));
        let prod = f.mul(&g);
        assert_eq!(prod.exact_div(&g).unwrap(), f);
    }

    #[test]
    fn demazure_examples() {
        let alphabet = [z(1), z(2), z(3)];
        // Symmetric input is fixed.
        let sym = LaurentPoly::var(z(1)).mul(&LaurentPoly::var(z(2)));
        assert_eq!(sym.demazure_op(1, &alphabet), sym);
        // pi_1(z1) = 0.
        assert!(LaurentPoly::var(z(1)).demazure_op(1, &alphabet).is_zero());
        // pi_1(z2) = z1 + z2.
        let expected = LaurentPoly::var(z(1)).add(&LaurentPoly::var(z(2)));
        assert_eq!(LaurentPoly::var(z(2)).demazure_op(1, &alphabet), expected);
    }

    #[test]
    fn demazure_matches_rational_definition() {
        // (z_{i+1} f - z_i s_i(f)) == pi_i(f) * (z_{i+1} - z_i), exactly.
        let alphabet = [z(1), z(2)];
        let mut f = LaurentPoly::one_minus_ratio(z(1), zd(1));
        f = f.mul(&f);
        f.add_term(Monomial::var(z(2), 3), BigInt::from(5));
        f.add_term(Monomial::var(z(1), -2).mul(&Monomial::var(z(2), 1)), BigInt::from(-7));
        let pi = f.demazure_op(1, &alphabet);
        let z1 = LaurentPoly::var(z(1));
        let z2 = LaurentPoly::var(z(2));
        let lhs = z2.mul(&f).sub(&z1.mul(&f.swap_vars(z(1), z(2))));
        let rhs = pi.mul(&z2.sub(&z1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_idempotent_and_braid() {
        let alphabet = [z(1), z(2), z(3)];
        let mut f = LaurentPoly::var(z(1));
        f.add_term(Monomial::var(z(2), 2), BigInt::from(3));
        f.add_term(
            Monomial::var(z(1), 1).mul(&Monomial::var(z(3), -1)),
            BigInt::from(-2),
        );
        let p1 = |g: &LaurentPoly| g.demazure_op(1, &alphabet);
        let p2 = |g: &LaurentPoly| g.demazure_op(2, &alphabet);
        assert_eq!(p1(&p1(&f)), p1(&f));
        assert_eq!(p2(&p2(&f)), p2(&f));
        assert_eq!(p1(&p2(&p1(&f))), p2(&p1(&p2(&f))));
    }

    #[test]
    fn set_ones_examples() {
        let f = LaurentPoly::one_minus_ratio(z(1), zd(1));
        assert_eq!(f.set_ones(&BTreeSet::new()), f);
        let mut just_b = BTreeSet::new();
        just_b.insert(zd(1));
        let expected = LaurentPoly::one().sub(&LaurentPoly::var(z(1)));
        assert_eq!(f.set_ones(&just_b), expected);
        let mut both = BTreeSet::new();
        both.insert(z(1));
        both.insert(zd(1));
        assert!(f.set_ones(&both).is_zero());
    }

    #[test]
    fn degree_helpers() {
        assert_eq!(LaurentPoly::constant(4).max_degree_in(Family::Z), 0);
        let f = LaurentPoly::one().sub(&LaurentPoly::var(z(1)));
        assert_eq!(f.max_degree_in(Family::Z), 1);
        let m = Monomial::var(z(1), 2).mul(&Monomial::var(zd(1), -1));
        let g = LaurentPoly::term(m, BigInt::one());
        assert_eq!(g.max_degree_in(Family::Z), 2);
        assert_eq!(g.max_degree_in(Family::ZDot), -1);
        assert_eq!(g.terms().next().unwrap().0.total_degree(), 1);
    }
}
