//! Double Grothendieck polynomials by two independent algorithms, stable
//! limits, and expansion into the partition-indexed stable basis.
//!
//! The recursion route starts from the top polynomial and applies
//! Demazure operators down a descent chain. The pipe-dream route sums
//! signed cross weights over all pipe dreams with the right Demazure
//! product; a layered automaton form of the same sum scales to the grid
//! sizes the stable limits need. The two routes agreeing on all of S_4
//! is an acceptance criterion.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::config::{Budget, Limits};
use crate::error::{Error, Result};
use crate::hecke;
use crate::perm::{PartialPerm, Partition, Perm};
use crate::pipedream::{self, searchable_cells};
use crate::poly::{Family, LaurentPoly, VarId};

/// Ordered row and column alphabets for a Grothendieck computation.
#[derive(Debug, Clone)]
pub struct Alphabets {
    pub z: Vec<VarId>,
    pub zdot: Vec<VarId>,
}

impl Alphabets {
    /// Plain `z_1..z_k` over `zd_1..zd_l`.
    pub fn standard(k: u32, l: u32) -> Self {
        Alphabets {
            z: (1..=k).map(|i| VarId::z(i as u16)).collect(),
            zdot: (1..=l).map(|i| VarId::zdot(i as u16)).collect(),
        }
    }
}

/// The top double Grothendieck polynomial for the longest element of
/// S_k: the product of `1 - z_i/zd_j` over `i + j <= k`.
pub fn top_polynomial(k: u32, alph: &Alphabets) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 1..k {
        for j in 1..=(k - i) {
            out = out.mul(&LaurentPoly::one_minus_ratio(
                alph.z[i as usize - 1],
                alph.zdot[j as usize - 1],
            ));
        }
    }
    out
}

/// Double Grothendieck polynomial of `v` in S_k by the Demazure
/// recursion, descending from the longest element along the smallest
/// descent that keeps `v` below the chain.
pub fn by_recursion(v: &Perm, k: u32, alph: &Alphabets) -> LaurentPoly {
    by_recursion_chain(v, k, alph, false)
}

/// Same recursion, with the descent chosen smallest or largest; the
/// result is independent of the chain.
pub fn by_recursion_chain(v: &Perm, k: u32, alph: &Alphabets, largest: bool) -> LaurentPoly {
    assert!(v.degree() <= k, "permutation must lie in S_k");
    assert!(alph.z.len() as u32 >= k && alph.zdot.len() as u32 >= k);
    let mut u = Perm::longest(k);
    let mut poly = top_polynomial(k, alph);
    while &u != v {
        let mut pick = None;
        for i in 1..k {
            if u.has_descent(i) && v.bruhat_leq(&u.right_mul_adjacent(i)) {
                pick = Some(i);
                if !largest {
                    break;
                }
            }
        }
        let i = pick.expect("a descent towards v always exists below the longest element");
        u = u.right_mul_adjacent(i);
        poly = poly.demazure_op(i as usize, &alph.z);
    }
    poly
}

/// Double Grothendieck polynomial of a partial permutation as the signed
/// sum of cross weights over the explicitly enumerated pipe dreams:
/// `sum over P(w) of (-1)^(|P| - l(w~)) prod (1 - z_i/zd_j)`.
pub fn by_pipe_dreams(w: &PartialPerm, alph: &Alphabets, limits: &Limits) -> Result<LaurentPoly> {
    assert!(alph.z.len() as u32 >= w.rows() && alph.zdot.len() as u32 >= w.cols());
    let target_len = w.min_completion().length();
    let mut out = LaurentPoly::zero();
    for p in pipedream::enumerate_dreams(w, limits)? {
        let mut term = LaurentPoly::one();
        for (r, c) in p.crosses() {
            term = term.mul(&LaurentPoly::one_minus_ratio(
                alph.z[r as usize - 1],
                alph.zdot[c as usize - 1],
            ));
        }
        if (p.count() as u64 - target_len) % 2 == 1 {
            term = term.neg();
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Per-row and per-column variable labels for a grid sum. `None` means
/// the variable is specialized to 1.
#[derive(Debug, Clone)]
pub struct GridLabels {
    pub row: Vec<Option<VarId>>,
    pub col: Vec<Option<VarId>>,
}

impl GridLabels {
    pub fn standard(k: u32, l: u32, rows: u32, cols: u32) -> Self {
        GridLabels {
            row: (1..=rows)
                .map(|i| (i <= k).then(|| VarId::z(i as u16)))
                .collect(),
            col: (1..=cols)
                .map(|j| (j <= l).then(|| VarId::zdot(j as u16)))
                .collect(),
        }
    }
}

/// Sum of `prod_{c in P} f_c` over all pipe dreams `P` in the grid with
/// Demazure product `target`, computed layer by layer over cells in
/// reading order. States with equal partial Demazure products merge, and
/// a backward viability pass drops states that can no longer reach the
/// target, so the cost tracks the useful part of the automaton.
pub fn hecke_cell_sum(
    rows: u32,
    cols: u32,
    target: &Perm,
    factors: &dyn Fn(u32, u32) -> LaurentPoly,
    limits: &Limits,
) -> Result<LaurentPoly> {
    let cells = searchable_cells(rows, cols, target);
    let weights: Vec<LaurentPoly> = cells.iter().map(|&(r, c)| factors(r, c)).collect();
    let target_len = target.length();
    let mut budget = Budget::new(limits);

    // Forward pass: which partial products occur after each prefix.
    let mut forward: Vec<BTreeSet<Perm>> = Vec::with_capacity(cells.len() + 1);
    let mut first = BTreeSet::new();
    first.insert(Perm::identity());
    forward.push(first);
    for t in 0..cells.len() {
        let (r, c) = cells[t];
        let letter = r + c - 1;
        let remaining = (cells.len() - t - 1) as u64;
        let mut next = BTreeSet::new();
        for u in &forward[t] {
            budget.tick()?;
            let len_u = u.length();
            if target_len - len_u <= remaining + 1 {
                if target_len - len_u <= remaining {
                    next.insert(u.clone());
                }
                if !weights[t].is_zero() {
                    let stepped = hecke::demazure_step(u, letter);
                    if stepped.length() >= target_len.saturating_sub(remaining)
                        && stepped.bruhat_leq(target)
                    {
                        next.insert(stepped);
                    }
                }
            }
        }
        forward.push(next);
    }

    // Backward pass: which states can still reach the target.
    let mut viable: Vec<BTreeSet<Perm>> = Vec::with_capacity(cells.len() + 1);
    viable.resize(cells.len() + 1, BTreeSet::new());
    if forward[cells.len()].contains(target) {
        viable[cells.len()].insert(target.clone());
    }
    for t in (0..cells.len()).rev() {
        let (r, c) = cells[t];
        let letter = r + c - 1;
        let mut set = BTreeSet::new();
        for u in &forward[t] {
            budget.tick()?;
            if viable[t + 1].contains(u) {
                set.insert(u.clone());
                continue;
            }
            if !weights[t].is_zero() {
                let stepped = hecke::demazure_step(u, letter);
                if viable[t + 1].contains(&stepped) {
                    set.insert(u.clone());
                }
            }
        }
        viable[t] = set;
    }

    // Weighted pass over the viable automaton.
    let mut layer: BTreeMap<Perm, LaurentPoly> = BTreeMap::new();
    if viable[0].contains(&Perm::identity()) {
        layer.insert(Perm::identity(), LaurentPoly::one());
    }
    for t in 0..cells.len() {
        let (r, c) = cells[t];
        let letter = r + c - 1;
        let mut next: BTreeMap<Perm, LaurentPoly> = BTreeMap::new();
        for (u, poly) in layer {
            budget.tick()?;
            if viable[t + 1].contains(&u) {
                match next.get_mut(&u) {
                    Some(acc) => *acc = acc.add(&poly),
                    None => {
                        next.insert(u.clone(), poly.clone());
                    }
                }
            }
            if !weights[t].is_zero() {
                let stepped = hecke::demazure_step(&u, letter);
                if viable[t + 1].contains(&stepped) {
                    let contribution = poly.mul(&weights[t]);
                    match next.get_mut(&stepped) {
                        Some(acc) => *acc = acc.add(&contribution),
                        None => {
                            next.insert(stepped, contribution);
                        }
                    }
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(target).unwrap_or_else(LaurentPoly::zero))
}

/// The pipe-dream sum for a permutation target on a labeled grid,
/// through the layered automaton. Labels set to `None` are specialized
/// to 1, and a cross whose row and column are both specialized
/// contributes weight zero.
pub fn pipe_sum_grothendieck(
    target: &Perm,
    labels: &GridLabels,
    limits: &Limits,
) -> Result<LaurentPoly> {
    let rows = labels.row.len() as u32;
    let cols = labels.col.len() as u32;
    assert!(target.degree() <= rows.max(cols) + 1);
    let factors = |r: u32, c: u32| -> LaurentPoly {
        // (z_r / zd_c) - 1 with specialized variables set to 1.
        match (labels.row[r as usize - 1], labels.col[c as usize - 1]) {
            (Some(z), Some(zd)) => LaurentPoly::ratio_minus_one(z, zd),
            (Some(z), None) => LaurentPoly::var(z).sub(&LaurentPoly::one()),
            (None, Some(zd)) => {
                LaurentPoly::term(crate::poly::Monomial::var(zd, -1), BigInt::one())
                    .sub(&LaurentPoly::one())
            }
            (None, None) => LaurentPoly::zero(),
        }
    };
    let sum = hecke_cell_sum(rows, cols, target, &factors, limits)?;
    if target.length() % 2 == 1 {
        Ok(sum.neg())
    } else {
        Ok(sum)
    }
}

/// Outcome of a detected stable limit.
#[derive(Debug, Clone)]
pub struct StableValue {
    pub poly: LaurentPoly,
    /// First shift of the run of three consecutive equal values.
    pub stable_from: u32,
}

/// Expansion of a stable Grothendieck polynomial over partitions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExpansionTable {
    coeffs: BTreeMap<Partition, BigInt>,
}

impl ExpansionTable {
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn get(&self, mu: &Partition) -> BigInt {
        self.coeffs.get(mu).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert(&mut self, mu: Partition, c: BigInt) {
        if !c.is_zero() {
            self.coeffs.insert(mu, c);
        }
    }
}

impl fmt::Display for ExpansionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (t, (mu, c)) in self.coeffs.iter().enumerate() {
            if t > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{mu}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// Stable-limit and expansion engine with a per-session cache.
#[derive(Debug, Default)]
pub struct Engine {
    pub limits: Limits,
    stable_cache: BTreeMap<(PartialPerm, u32, u32), StableValue>,
}

impl Engine {
    pub fn new(limits: Limits) -> Self {
        Engine { limits, stable_cache: BTreeMap::new() }
    }

    /// Stable double Grothendieck polynomial of a partial permutation on
    /// alphabets of sizes `k`, `l`: the polynomials `G_{m+w}` with all
    /// variables past the first `k` (resp. `l`) set to 1 are computed for
    /// increasing shifts `m` until three consecutive values agree.
    pub fn stable(&mut self, w: &PartialPerm, k: u32, l: u32) -> Result<StableValue> {
        let key = (w.clone(), k, l);
        if let Some(hit) = self.stable_cache.get(&key) {
            return Ok(hit.clone());
        }
        let bound = self.limits.stab_bound.unwrap_or(k + l + 2);
        let mut history: Vec<LaurentPoly> = Vec::new();
        for m in 0..=bound {
            let shifted = w.shift(m);
            let target = shifted.min_completion();
            let n = target
                .degree()
                .max(shifted.rows())
                .max(shifted.cols());
            let labels = GridLabels::standard(k, l, n, n);
            let value = pipe_sum_grothendieck(&target, &labels, &self.limits)?;
            history.push(value);
            if history.len() >= 3 {
                let h = &history[history.len() - 3..];
                if h[0] == h[1] && h[1] == h[2] {
                    let out = StableValue { poly: h[2].clone(), stable_from: m - 2 };
                    self.stable_cache.insert(key, out.clone());
                    return Ok(out);
                }
            }
        }
        Err(Error::StabilizationNotDetected { bound })
    }

    /// Stable polynomial for a partition through its grassmannian
    /// permutation with descent at the number of parts; independence of
    /// the descent choice is a tested property.
    pub fn stable_partition(&mut self, mu: &Partition, k: u32, l: u32) -> Result<StableValue> {
        if mu.is_empty() {
            return Ok(StableValue { poly: LaurentPoly::one(), stable_from: 0 });
        }
        let v = mu.to_grassmannian(mu.len() as u32);
        self.stable(&v.matrix(), k, l)
    }

    /// Coefficients of the unique expansion of the stable polynomial of
    /// `w` over stable polynomials of partitions, solved as an exact
    /// integer linear system. Candidates start at partitions with at most
    /// `k` rows and size bounded by the maximal z-degree; on a nonzero
    /// residual the candidate set is enlarged before giving up.
    pub fn expand_grassmannian(&mut self, w: &PartialPerm, k: u32, l: u32) -> Result<ExpansionTable> {
        let ghat = self.stable(w, k, l)?.poly;
        let base_degree = ghat.max_degree_in(Family::Z);
        let mut restrict_rows = true;
        let mut degree = base_degree;
        loop {
            match self.try_expand(&ghat, k, l, degree, restrict_rows)? {
                Some(table) => return Ok(table),
                None => {
                    if restrict_rows {
                        restrict_rows = false;
                    } else if degree < base_degree + 2 {
                        degree += 1;
                    } else {
                        return Err(Error::NoExactExpansion { degree_bound: degree });
                    }
                }
            }
        }
    }

    /// Expansion with the cross-size consistency check: recomputed at
    /// alphabets one larger, the two tables must agree after dropping the
    /// candidates whose stable polynomial vanishes at the smaller size.
    /// The larger table is returned.
    pub fn expand_checked(&mut self, w: &PartialPerm, k: u32, l: u32) -> Result<ExpansionTable> {
        let small = self.expand_grassmannian(w, k, l)?;
        let big = self.expand_grassmannian(w, k + 1, l + 1)?;
        let mut restricted = ExpansionTable::default();
        for (mu, c) in big.coeffs() {
            if !self.stable_partition(mu, k, l)?.poly.is_zero() {
                restricted.insert(mu.clone(), c.clone());
            }
        }
        if restricted != small {
            return Err(Error::NoExactExpansion { degree_bound: -1 });
        }
        Ok(big)
    }

    fn try_expand(
        &mut self,
        ghat: &LaurentPoly,
        k: u32,
        l: u32,
        degree: i64,
        restrict_rows: bool,
    ) -> Result<Option<ExpansionTable>> {
        let mut candidates: Vec<(Partition, LaurentPoly)> = Vec::new();
        for size in 0..=degree.max(0) as u64 {
            for mu in Partition::of_size(size) {
                if restrict_rows && mu.len() as u32 > k {
                    continue;
                }
                let poly = self.stable_partition(&mu, k, l)?.poly;
                if !poly.is_zero() {
                    candidates.push((mu, poly));
                }
            }
        }
        let solution = match solve_exact(&candidates, ghat) {
            Some(sol) => sol,
            None => return Ok(None),
        };
        // Authoritative residual check by recombination.
        let mut recombined = LaurentPoly::zero();
        for ((_, poly), c) in candidates.iter().zip(&solution) {
            recombined = recombined.add(&poly.scale(c));
        }
        if &recombined != ghat {
            return Ok(None);
        }
        let mut table = ExpansionTable::default();
        for ((mu, _), c) in candidates.into_iter().zip(solution) {
            table.insert(mu, c);
        }
        Ok(Some(table))
    }
}

/// Reduced fraction of big integers, just enough for back-substitution.
#[derive(Clone)]
struct Rat {
    num: BigInt,
    den: BigInt,
}

impl Rat {
    fn from_int(n: BigInt) -> Self {
        Rat { num: n, den: BigInt::one() }
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            return Rat::from_int(BigInt::zero());
        }
        if self.den.is_negative() {
            self.num = -self.num;
            self.den = -self.den;
        }
        let g = gcd(self.num.abs(), self.den.abs());
        Rat { num: self.num / &g, den: self.den / &g }
    }

    fn sub_mul(&self, a: &BigInt, x: &Rat) -> Rat {
        // self - a * x
        Rat {
            num: &self.num * &x.den - a * &x.num * &self.den,
            den: &self.den * &x.den,
        }
        .reduce()
    }

    fn div_int(&self, a: &BigInt) -> Rat {
        Rat { num: self.num.clone(), den: &self.den * a }.reduce()
    }

    fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Solves `sum_j x_j * candidate_j = target` exactly over the integers.
/// Returns `None` when the system is inconsistent, rank-deficient, or
/// has a non-integer solution.
fn solve_exact(candidates: &[(Partition, LaurentPoly)], target: &LaurentPoly) -> Option<Vec<BigInt>> {
    use crate::poly::Monomial;
    if candidates.is_empty() {
        return if target.is_zero() { Some(Vec::new()) } else { None };
    }
    let mut monomials: BTreeSet<Monomial> = BTreeSet::new();
    for (_, p) in candidates {
        monomials.extend(p.terms().map(|(m, _)| m.clone()));
    }
    monomials.extend(target.terms().map(|(m, _)| m.clone()));
    let monomials: Vec<Monomial> = monomials.into_iter().collect();
    let ncols = candidates.len();
    let nrows = monomials.len();
    if nrows < ncols {
        return None;
    }
    let mut matrix: Vec<Vec<BigInt>> = Vec::with_capacity(nrows);
    for m in &monomials {
        let mut row: Vec<BigInt> = candidates.iter().map(|(_, p)| p.coefficient(m)).collect();
        row.push(target.coefficient(m));
        matrix.push(row);
    }

    // Fraction-free (Bareiss) forward elimination; every division here is
    // exact by the Sylvester determinant identity.
    let mut prev_pivot = BigInt::one();
    for col in 0..ncols {
        let pivot_row = (col..nrows).find(|&r| !matrix[r][col].is_zero())?;
        matrix.swap(col, pivot_row);
        let (top, rest) = matrix.split_at_mut(col + 1);
        let pivot_row_data = &top[col];
        for row in rest.iter_mut() {
            for c in (col + 1)..=ncols {
                let val =
                    (&pivot_row_data[col] * &row[c] - &row[col] * &pivot_row_data[c]) / &prev_pivot;
                row[c] = val;
            }
            row[col] = BigInt::zero();
        }
        prev_pivot = matrix[col][col].clone();
    }
    // Consistency of the leftover rows.
    for row in matrix.iter().skip(ncols) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    // Rational back-substitution over the triangular head.
    let mut solution: Vec<Rat> = alloc::vec![Rat::from_int(BigInt::zero()); ncols];
    for j in (0..ncols).rev() {
        let mut acc = Rat::from_int(matrix[j][ncols].clone());
        for c in (j + 1)..ncols {
            acc = acc.sub_mul(&matrix[j][c], &solution[c]);
        }
        solution[j] = acc.div_int(&matrix[j][j]);
    }
    solution.into_iter().map(|r| r.as_integer()).collect()
}

/// The signed pipe-dream sum and the Demazure recursion must agree; used
/// in tests and the acceptance suite.
pub fn routes_agree(v: &Perm, k: u32, limits: &Limits) -> Result<bool> {
    let alph = Alphabets::standard(k, k);
    let rec = by_recursion(v, k, &alph);
    let pd = by_pipe_dreams(&matrix_in(v, k), &alph, limits)?;
    Ok(rec == pd)
}

/// The permutation matrix of `v` padded to size `k x k`.
pub fn matrix_in(v: &Perm, k: u32) -> PartialPerm {
    assert!(v.degree() <= k);
    let entries: Vec<(u32, u32)> = (1..=k).map(|p| (p, v.apply(p))).collect();
    PartialPerm::new(k, k, &entries).expect("permutation matrix")
}
