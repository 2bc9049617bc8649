//! Permutations with finite support, partial permutations and partitions.
//!
//! Permutations are one-indexed and stored with trailing fixed points
//! trimmed, so equality compares elements of the infinite symmetric group.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation of the positive integers fixing all but finitely many.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    /// images[p-1] = v(p); trailing fixed points trimmed.
    images: Vec<u32>,
}

impl Perm {
    pub fn identity() -> Self {
        Perm { images: Vec::new() }
    }

    /// Builds a permutation from one-line notation, checking bijectivity.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::Invalid(String::from(
                    "one-line notation is not a bijection",
                )));
            }
            seen[v as usize - 1] = true;
        }
        let mut images = images.to_vec();
        while let Some(&last) = images.last() {
            if last as usize == images.len() {
                images.pop();
            } else {
                break;
            }
        }
        Ok(Perm { images })
    }

    /// The adjacent transposition swapping `i` and `i+1`.
    pub fn transposition(i: u32) -> Self {
        assert!(i >= 1);
        let mut images: Vec<u32> = (1..=i + 1).collect();
        images.swap(i as usize - 1, i as usize);
        Perm { images }
    }

    /// Longest element of the symmetric group on `{1..k}`.
    pub fn longest(k: u32) -> Self {
        Perm {
            images: (1..=k).rev().collect(),
        }
    }

    pub fn apply(&self, p: u32) -> u32 {
        assert!(p >= 1);
        match self.images.get(p as usize - 1) {
            Some(&v) => v,
            None => p,
        }
    }

    /// Size of the trimmed one-line form.
    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    pub fn one_line(&self, n: u32) -> Vec<u32> {
        (1..=n.max(self.degree())).map(|p| self.apply(p)).collect()
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> u64 {
        let n = self.images.len();
        let mut count = 0u64;
        for p in 0..n {
            for q in p + 1..n {
                if self.images[p] > self.images[q] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Composition `self ∘ other`, so `(self * other)(p) = self(other(p))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let n = self.degree().max(other.degree());
        let images: Vec<u32> = (1..=n).map(|p| self.apply(other.apply(p))).collect();
        Perm::from_images(&images).expect("composition of bijections")
    }

    pub fn inverse(&self) -> Perm {
        let n = self.degree();
        let mut images = vec![0u32; n as usize];
        for p in 1..=n {
            images[self.apply(p) as usize - 1] = p;
        }
        Perm::from_images(&images).expect("inverse of a bijection")
    }

    /// Right multiplication by the adjacent transposition `s_i`,
    /// i.e. swapping positions `i` and `i+1` in one-line notation.
    pub fn right_mul_adjacent(&self, i: u32) -> Perm {
        assert!(i >= 1);
        let n = self.degree().max(i + 1);
        let mut images = self.one_line(n);
        images.swap(i as usize - 1, i as usize);
        Perm::from_images(&images).expect("swap keeps a bijection")
    }

    /// True iff `v(i) > v(i+1)`, equivalently `l(v s_i) < l(v)`.
    pub fn has_descent(&self, i: u32) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn descents(&self) -> Vec<u32> {
        (1..=self.degree()).filter(|&i| self.has_descent(i)).collect()
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() <= 1
    }

    /// One reduced word for `self`, produced by repeatedly removing the
    /// smallest descent.
    pub fn reduced_word(&self) -> Vec<u32> {
        let mut word = Vec::new();
        let mut v = self.clone();
        while let Some(&i) = v.descents().first() {
            word.push(i);
            v = v.right_mul_adjacent(i);
        }
        word.reverse();
        word
    }

    /// Prepends an identity block: the result fixes `1..m` and maps
    /// `m+p` to `m + self(p)`.
    pub fn shift(&self, m: u32) -> Perm {
        let mut images: Vec<u32> = (1..=m).collect();
        images.extend(self.images.iter().map(|&v| v + m));
        Perm::from_images(&images).expect("shift keeps a bijection")
    }

    /// Bruhat order via the northwest rank criterion: `u <= v` iff
    /// `#{a <= p : u(a) <= q} >= #{a <= p : v(a) <= q}` for all `p, q`.
    pub fn bruhat_leq(&self, other: &Perm) -> bool {
        let n = self.degree().max(other.degree());
        if self.length() > other.length() {
            return false;
        }
        let mut self_row = vec![0i32; n as usize + 1];
        let mut other_row = vec![0i32; n as usize + 1];
        for p in 1..=n {
            let u = self.apply(p) as usize;
            let v = other.apply(p) as usize;
            for q in u..=n as usize {
                self_row[q] += 1;
            }
            for q in v..=n as usize {
                other_row[q] += 1;
            }
            for q in 1..=n as usize {
                if self_row[q] < other_row[q] {
                    return false;
                }
            }
        }
        true
    }

    /// The permutation matrix of `self`, of size `degree x degree`.
    pub fn matrix(&self) -> PartialPerm {
        let n = self.degree();
        let entries: Vec<(u32, u32)> = (1..=n).map(|p| (p, self.apply(p))).collect();
        PartialPerm::new(n, n, &entries).expect("permutation matrix")
    }

    /// All elements of the symmetric group on `{1..n}`.
    pub fn all(n: u32) -> Vec<Perm> {
        fn rec(values: &mut Vec<u32>, used: &mut [bool], n: u32, out: &mut Vec<Perm>) {
            if values.len() == n as usize {
                out.push(Perm::from_images(values).expect("bijection"));
                return;
            }
            for v in 1..=n {
                if !used[v as usize] {
                    used[v as usize] = true;
                    values.push(v);
                    rec(values, used, n, out);
                    values.pop();
                    used[v as usize] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n as usize + 1], n, &mut out);
        out
    }

    /// For a grassmannian permutation, the indexing partition together
    /// with the descent position. The identity yields the empty
    /// partition with descent 0.
    pub fn grassmannian_partition(&self) -> Option<(Partition, u32)> {
        let descents = self.descents();
        match descents.len() {
            0 => Some((Partition::empty(), 0)),
            1 => {
                let p = descents[0];
                let mut parts = Vec::new();
                for i in 1..=p {
                    let part = self.apply(p + 1 - i) - (p + 1 - i);
                    if part > 0 {
                        parts.push(part);
                    }
                }
                Some((Partition::new(&parts).expect("weakly decreasing by construction"), p))
            }
            _ => None,
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (t, v) in self.images.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A 0/1 matrix with at most one 1 in each row and column.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialPerm {
    rows: u32,
    cols: u32,
    /// row -> column of the 1 in that row.
    entries: BTreeMap<u32, u32>,
}

impl PartialPerm {
    pub fn new(rows: u32, cols: u32, entries: &[(u32, u32)]) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Invalid(String::from("matrix dimensions must be positive")));
        }
        let mut map = BTreeMap::new();
        let mut used_cols = BTreeMap::new();
        for &(r, c) in entries {
            if r == 0 || c == 0 || r > rows || c > cols {
                return Err(Error::Invalid(format!("entry ({r},{c}) outside {rows}x{cols} grid")));
            }
            if map.insert(r, c).is_some() {
                return Err(Error::Invalid(format!("two entries in row {r}")));
            }
            if used_cols.insert(c, r).is_some() {
                return Err(Error::Invalid(format!("two entries in column {c}")));
            }
        }
        Ok(PartialPerm { rows, cols, entries: map })
    }

    /// Parses rows of '0'/'1' characters separated by '/'.
    pub fn from_rows_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split('/').collect();
        let height = rows.len() as u32;
        let width = rows.first().map(|r| r.len()).unwrap_or(0) as u32;
        let mut entries = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            if row.len() as u32 != width {
                return Err(Error::Invalid(String::from("ragged matrix rows")));
            }
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => entries.push((r as u32 + 1, c as u32 + 1)),
                    _ => return Err(Error::Invalid(format!("bad matrix character {ch:?}"))),
                }
            }
        }
        PartialPerm::new(height, width, &entries)
    }

    pub fn zero(rows: u32, cols: u32) -> Self {
        PartialPerm::new(rows, cols, &[]).expect("empty matrix")
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn image_of(&self, row: u32) -> Option<u32> {
        self.entries.get(&row).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&r, &c)| (r, c))
    }

    /// Number of 1s, which is also the rank of the matrix.
    pub fn rank(&self) -> u32 {
        self.entries.len() as u32
    }

    /// Matrix product `self * other` of 0/1 partial permutation matrices,
    /// which is again a partial permutation.
    pub fn matrix_product(&self, other: &PartialPerm) -> Result<PartialPerm> {
        if self.cols != other.rows {
            return Err(Error::Invalid(String::from("inner dimensions differ")));
        }
        let entries: Vec<(u32, u32)> = self
            .entries()
            .filter_map(|(r, t)| other.image_of(t).map(|c| (r, c)))
            .collect();
        PartialPerm::new(self.rows, other.cols, &entries)
    }

    /// The minimal-length permutation whose upper-left corner is `self`.
    ///
    /// Rows of the corner left empty must map beyond the corner columns;
    /// scanning top to bottom and assigning the smallest unused column at
    /// each step minimizes the length (validated by brute force in tests).
    pub fn min_completion(&self) -> Perm {
        let k = self.rows;
        let l = self.cols;
        let e = self.rank();
        let n = (k + (l - e)).max(l + (k - e));
        let mut used = vec![false; n as usize + 1];
        let mut images = vec![0u32; n as usize];
        for (r, c) in self.entries() {
            images[r as usize - 1] = c;
            used[c as usize] = true;
        }
        for r in 1..=k {
            if images[r as usize - 1] == 0 {
                let c = (l + 1..=n).find(|&c| !used[c as usize]).expect("room left");
                images[r as usize - 1] = c;
                used[c as usize] = true;
            }
        }
        for r in k + 1..=n {
            let c = (1..=n).find(|&c| !used[c as usize]).expect("room left");
            images[r as usize - 1] = c;
            used[c as usize] = true;
        }
        Perm::from_images(&images).expect("completion is a bijection")
    }

    /// The same matrix acting on `{m+1, m+2, ...}`: an `m x m` identity
    /// block in the upper left with `self` shifted to the lower right.
    pub fn shift(&self, m: u32) -> PartialPerm {
        let mut entries: Vec<(u32, u32)> = (1..=m).map(|t| (t, t)).collect();
        entries.extend(self.entries().map(|(r, c)| (r + m, c + m)));
        PartialPerm::new(self.rows + m, self.cols + m, &entries).expect("shift is valid")
    }

    /// All `rows x cols` partial permutation matrices.
    pub fn enumerate_all(rows: u32, cols: u32) -> Vec<PartialPerm> {
        let mut out = Vec::new();
        let mut entries: Vec<(u32, u32)> = Vec::new();
        let mut used = vec![false; cols as usize + 1];
        fn rec(
            row: u32,
            rows: u32,
            cols: u32,
            entries: &mut Vec<(u32, u32)>,
            used: &mut [bool],
            out: &mut Vec<PartialPerm>,
        ) {
            if row > rows {
                out.push(PartialPerm::new(rows, cols, entries).expect("valid by construction"));
                return;
            }
            rec(row + 1, rows, cols, entries, used, out);
            for c in 1..=cols {
                if !used[c as usize] {
                    used[c as usize] = true;
                    entries.push((row, c));
                    rec(row + 1, rows, cols, entries, used, out);
                    entries.pop();
                    used[c as usize] = false;
                }
            }
        }
        rec(1, rows, cols, &mut entries, &mut used, &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.rows {
            if r > 1 {
                write!(f, "/")?;
            }
            for c in 1..=self.cols {
                let ch = if self.image_of(r) == Some(c) { '1' } else { '0' };
                write!(f, "{ch}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn new(parts: &[u32]) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Invalid(String::from("parts must weakly decrease")));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid(String::from("parts must be positive")));
        }
        Ok(Partition { parts: parts.to_vec() })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The grassmannian permutation with this shape and descent at `p`.
    /// Requires `p >= len`; the empty partition gives the identity.
    pub fn to_grassmannian(&self, p: u32) -> Perm {
        assert!(p as usize >= self.len(), "descent position below part count");
        if self.is_empty() {
            return Perm::identity();
        }
        let width = p + self.first();
        let mut images = vec![0u32; width as usize];
        let mut used = vec![false; width as usize + 1];
        for i in 1..=p {
            let part = self.parts.get((p - i) as usize).copied().unwrap_or(0);
            let v = i + part;
            images[i as usize - 1] = v;
            used[v as usize] = true;
        }
        let mut next = 1;
        for slot in images.iter_mut().skip(p as usize) {
            while used[next as usize] {
                next += 1;
            }
            *slot = next;
            used[next as usize] = true;
        }
        Perm::from_images(&images).expect("grassmannian construction is a bijection")
    }

    /// All partitions of total size `size`.
    pub fn of_size(size: u64) -> Vec<Partition> {
        fn rec(remaining: u64, max_part: u64, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            let mut part = remaining.min(max_part);
            while part >= 1 {
                acc.push(part as u32);
                rec(remaining - part, part, acc, out);
                acc.pop();
                part -= 1;
            }
        }
        let mut out = Vec::new();
        rec(size, size.max(1), &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, p) in self.parts.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Block decomposition of a `d x d` grid determined by ranks `r_0..r_n`.
///
/// Block row `j` (from the top) has height `r_j`. Block columns are
/// indexed FROM THE RIGHT: block column `i` has width `r_i`, so block
/// column 0 is the rightmost one. Mirror bugs here are fatal, hence the
/// explicit helpers.
#[derive(Debug, Clone)]
pub struct BlockLayout {
    ranks: Vec<u32>,
    d: u32,
    /// row_start[j] = first grid row (1-based) of block row j.
    row_start: Vec<u32>,
    /// col_start_from_left[i] = first grid column (1-based) of block
    /// column i, where i counts from the right.
    col_start: Vec<u32>,
}

impl BlockLayout {
    pub fn new(ranks: &[u32]) -> Self {
        let d: u32 = ranks.iter().sum();
        let mut row_start = Vec::with_capacity(ranks.len());
        let mut acc = 1;
        for &r in ranks {
            row_start.push(acc);
            acc += r;
        }
        // Block column i occupies columns (d - r_0 - .. - r_i, d - r_0 - .. - r_{i-1}].
        let mut col_start = Vec::with_capacity(ranks.len());
        let mut right_acc = 0;
        for &r in ranks {
            right_acc += r;
            col_start.push(d - right_acc + 1);
        }
        BlockLayout { ranks: ranks.to_vec(), d, row_start, col_start }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Block row index of a grid row.
    pub fn block_row(&self, row: u32) -> usize {
        debug_assert!(row >= 1 && row <= self.d);
        match self.row_start.binary_search(&row) {
            Ok(j) => j,
            Err(j) => j - 1,
        }
    }

    /// Block column index (from the right) of a grid column.
    pub fn block_col(&self, col: u32) -> usize {
        debug_assert!(col >= 1 && col <= self.d);
        (0..self.ranks.len())
            .find(|&i| col >= self.col_start[i])
            .expect("column inside the grid")
    }

    /// 1-based position of `row` inside its block row, counted from the top.
    pub fn local_row(&self, row: u32) -> u32 {
        row - self.row_start[self.block_row(row)] + 1
    }

    /// 1-based position of `col` inside its block column, counted from the left.
    pub fn local_col(&self, col: u32) -> u32 {
        col - self.col_start[self.block_col(col)] + 1
    }

    pub fn row_range(&self, j: usize) -> (u32, u32) {
        (self.row_start[j], self.row_start[j] + self.ranks[j] - 1)
    }

    pub fn col_range(&self, i: usize) -> (u32, u32) {
        (self.col_start[i], self.col_start[i] + self.ranks[i] - 1)
    }
}

/// Whether `v` is a Zelevinsky permutation for the given ranks: the block
/// `B_{ji}` (block row j, block column i from the right) has no 1s when
/// `i >= j+2`, and within every block row and block column the 1s proceed
/// from northwest to southeast.
pub fn is_zelevinsky(v: &Perm, ranks: &[u32]) -> bool {
    let layout = BlockLayout::new(ranks);
    let d = layout.d();
    if v.degree() > d {
        return false;
    }
    let ones: Vec<(u32, u32)> = (1..=d).map(|p| (p, v.apply(p))).collect();
    for &(row, col) in &ones {
        if layout.block_col(col) >= layout.block_row(row) + 2 {
            return false;
        }
    }
    for &(r1, c1) in &ones {
        for &(r2, c2) in &ones {
            let northeast_pair = r1 < r2 && c1 > c2;
            if !northeast_pair {
                continue;
            }
            if layout.block_row(r1) == layout.block_row(r2)
                || layout.block_col(c1) == layout.block_col(c2)
            {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_examples() {
        assert_eq!(Perm::identity().length(), 0);
        for k in 1..6 {
            assert_eq!(Perm::longest(k).length(), (k as u64) * (k as u64 - 1) / 2);
        }
        assert_eq!(Perm::from_images(&[2, 4, 1, 3]).unwrap().length(), 3);
    }

    #[test]
    fn trailing_fixed_points_trimmed() {
        let a = Perm::from_images(&[2, 1, 3, 4]).unwrap();
        let b = Perm::from_images(&[2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.degree(), 2);
    }

    #[test]
    fn min_completion_examples() {
        let id2 = PartialPerm::from_rows_str("10/01").unwrap();
        assert_eq!(id2.min_completion(), Perm::identity());

        let single = PartialPerm::from_rows_str("01/00").unwrap();
        assert_eq!(single.min_completion(), Perm::from_images(&[2, 3, 1]).unwrap());

        let w = PartialPerm::from_rows_str("0100/0000/1000").unwrap();
        let completion = w.min_completion();
        assert_eq!(completion, Perm::from_images(&[2, 5, 1, 3, 4]).unwrap());
        assert_eq!(completion.length(), 4);
    }

    #[test]
    fn min_completion_idempotent_on_permutations() {
        for images in [[1u32, 2, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1], [2, 1, 3], [1, 3, 2]] {
            let v = Perm::from_images(&images).unwrap();
            assert_eq!(v.matrix().min_completion(), v);
        }
    }

    #[test]
    fn shift_examples() {
        let w = PartialPerm::from_rows_str("01").unwrap();
        assert_eq!(w.shift(0), w);
        let shifted = w.shift(2);
        assert_eq!(shifted.rows(), 3);
        assert_eq!(shifted.cols(), 4);
        let entries: Vec<(u32, u32)> = shifted.entries().collect();
        assert_eq!(entries, vec![(1, 1), (2, 2), (3, 4)]);

        let one = PartialPerm::from_rows_str("1").unwrap();
        assert_eq!(one.shift(1), PartialPerm::from_rows_str("10/01").unwrap());
    }

    #[test]
    fn shift_length_offset_constant_in_m() {
        for rows in 2..=2u32 {
            for cols in 2..=3u32 {
                for w in PartialPerm::enumerate_all(rows, cols) {
                    let base = w.min_completion().length();
                    for m in 0..=3 {
                        let shifted = w.shift(m).min_completion().length();
                        assert_eq!(shifted - base, 0, "w={w:?} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn grassmannian_examples() {
        assert!(Perm::identity().is_grassmannian());
        assert!(Perm::from_images(&[1, 3, 2, 4]).unwrap().is_grassmannian());
        assert!(!Perm::from_images(&[3, 2, 1]).unwrap().is_grassmannian());
    }

    #[test]
    fn grassmannian_partition_round_trip() {
        assert_eq!(
            Perm::identity().grassmannian_partition(),
            Some((Partition::empty(), 0))
        );
        let mu = Partition::new(&[2, 1]).unwrap();
        let v = mu.to_grassmannian(2);
        assert_eq!(v, Perm::from_images(&[2, 4, 1, 3]).unwrap());
        assert_eq!(v.descents(), vec![2]);
        assert_eq!(v.grassmannian_partition(), Some((mu, 2)));
    }

    #[test]
    fn grassmannian_round_trip_s5() {
        let mut grass = 0;
        for v in Perm::all(5) {
            if let Some((mu, p)) = v.grassmannian_partition() {
                grass += 1;
                if !v.is_identity() {
                    assert_eq!(mu.to_grassmannian(p), v);
                    assert_eq!(mu.size(), v.length());
                }
            }
        }
        assert!(grass > 5);
    }

    /// u <= v iff some subword of a fixed reduced word of v is a reduced
    /// word of u.
    fn bruhat_leq_subword(u: &Perm, v: &Perm) -> bool {
        let word = v.reduced_word();
        let m = word.len();
        for mask in 0u32..(1 << m) {
            let sub: Vec<u32> = (0..m).filter(|&t| mask & (1 << t) != 0).map(|t| word[t]).collect();
            let mut prod = Perm::identity();
            for &i in &sub {
                prod = prod.right_mul_adjacent(i);
            }
            if prod == *u && prod.length() as usize == sub.len() {
                return true;
            }
        }
        false
    }

    #[test]
    fn bruhat_examples() {
        let v = Perm::from_images(&[3, 1, 2]).unwrap();
        assert!(Perm::identity().bruhat_leq(&v));
        assert!(v.bruhat_leq(&v));
        assert!(Perm::from_images(&[2, 1, 3]).unwrap().bruhat_leq(&v));
    }

    #[test]
    fn bruhat_matches_subword_criterion_on_s4() {
        let perms = Perm::all(4);
        for u in &perms {
            for v in &perms {
                assert_eq!(
                    u.bruhat_leq(v),
                    bruhat_leq_subword(u, v),
                    "u={u:?} v={v:?}"
                );
            }
        }
    }

    #[test]
    fn reduced_word_is_reduced() {
        for v in Perm::all(4) {
            let word = v.reduced_word();
            assert_eq!(word.len() as u64, v.length());
            let mut prod = Perm::identity();
            for &i in &word {
                prod = prod.right_mul_adjacent(i);
            }
            assert_eq!(prod, v);
        }
    }

    #[test]
    fn zelevinsky_predicate_small() {
        // Both elements of S_2 are Zelevinsky for ranks (1,1).
        assert!(is_zelevinsky(&Perm::identity(), &[1, 1]));
        assert!(is_zelevinsky(&Perm::transposition(1), &[1, 1]));
        // For ranks (1,1,1) the identity has a 1 in the zero block B_{02}.
        assert!(!is_zelevinsky(&Perm::identity(), &[1, 1, 1]));
        assert!(is_zelevinsky(&Perm::transposition(1), &[1, 1, 1]));
    }

    #[test]
    fn block_layout_from_the_right() {
        let layout = BlockLayout::new(&[1, 2, 1]);
        // Block column 0 is the rightmost column.
        assert_eq!(layout.col_range(0), (4, 4));
        assert_eq!(layout.col_range(1), (2, 3));
        assert_eq!(layout.col_range(2), (1, 1));
        assert_eq!(layout.row_range(0), (1, 1));
        assert_eq!(layout.row_range(1), (2, 3));
        assert_eq!(layout.block_col(1), 2);
        assert_eq!(layout.block_col(4), 0);
        assert_eq!(layout.local_col(3), 2);
    }

    #[test]
    fn min_completion_matches_brute_force() {
        // Oracle: enumerate all completions inside S_{k+l} and take the
        // unique length-minimal one.
        for (rows, cols) in [(2u32, 2u32), (2, 3), (3, 2)] {
            let n = rows + cols;
            let perms = Perm::all(n);
            for w in PartialPerm::enumerate_all(rows, cols) {
                let mut best: Option<&Perm> = None;
                let mut tie = false;
                for v in &perms {
                    let corner_matches = (1..=rows).all(|r| {
                        let img = v.apply(r);
                        match w.image_of(r) {
                            Some(c) => img == c,
                            None => img > cols,
                        }
                    }) && (1..=cols).all(|c| {
                        let pre = v.inverse().apply(c);
                        match w.entries().find(|&(_, wc)| wc == c) {
                            Some((r, _)) => pre == r,
                            None => pre > rows,
                        }
                    });
                    if corner_matches {
                        match best {
                            None => best = Some(v),
                            Some(b) => {
                                if v.length() < b.length() {
                                    best = Some(v);
                                    tie = false;
                                } else if v.length() == b.length() && v != b {
                                    tie = true;
                                }
                            }
                        }
                    }
                }
                let best = best.expect("some completion exists");
                assert!(!tie, "minimizer must be unique for {w:?}");
                assert_eq!(&w.min_completion(), best, "w={w:?}");
            }
        }
    }
}
