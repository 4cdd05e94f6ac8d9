//! Permutations and the integral group algebra of the symmetric group.
//!
//! Composition is `(p * q)(i) = p(q(i))`: the right factor acts first.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tableau::Numbering;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// From the image list `[p(1), ..., p(n)]`.
    pub fn from_images(images: Vec<u8>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn s(n: usize, i: usize) -> Permutation {
        Permutation::transposition(n, i, i + 1)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n(), rhs.n(), "degree mismatch");
        Permutation {
            images: rhs.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = vec![false; self.n() + 1];
        let mut out = Vec::new();
        for start in 1..=self.n() as u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle type as a weakly decreasing list.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Lexicographic rank among all `n!` image lists.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut used = vec![false; n + 1];
        let mut r = 0;
        for (pos, &x) in self.images.iter().enumerate() {
            let smaller = (1..x).filter(|&y| !used[y as usize]).count();
            r = r * (n - pos) + smaller;
            used[x as usize] = true;
        }
        r
    }

    /// Every permutation of `1..=n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Permute the entries of a numbering.
pub fn act(p: &Permutation, t: &Numbering) -> Numbering {
    Numbering::from_rows_unchecked(
        t.rows()
            .iter()
            .map(|r| r.iter().map(|&x| p.apply(x)).collect())
            .collect(),
    )
}

/// The permutation with `sigma(T(i,j)) = S(i,j)`.
pub fn sigma(t: &Numbering, s: &Numbering) -> Result<Permutation> {
    if t.shape() != s.shape() {
        return Err(Error::Domain("sigma needs numberings of one shape".into()));
    }
    let mut images = vec![0u8; t.n()];
    for (a, b) in t.word().into_iter().zip(s.word()) {
        images[a as usize - 1] = b;
    }
    Ok(Permutation { images })
}

/// A finite formal integer combination of permutations of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn of(p: Permutation) -> Self {
        Self::term(p, BigInt::one())
    }

    pub fn term(p: Permutation, c: BigInt) -> Self {
        let mut x = Self::zero(p.n());
        x.add_term(p, c);
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, p: Permutation, c: BigInt) {
        assert_eq!(p.n(), self.n, "degree mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "degree mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        let mut out = Self::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        Ok(out)
    }

    pub fn left_mul(&self, p: &Permutation) -> Self {
        let mut out = Self::zero(self.n);
        for (q, c) in &self.terms {
            out.add_term(p.compose(q), c.clone());
        }
        out
    }

    pub fn right_mul(&self, p: &Permutation) -> Self {
        let mut out = Self::zero(self.n);
        for (q, c) in &self.terms {
            out.add_term(q.compose(p), c.clone());
        }
        out
    }

    /// Dense coefficient vector indexed by [`Permutation::rank`].
    pub fn to_dense(&self) -> Vec<i64> {
        let size: usize = (1..=self.n).product();
        let mut v = vec![0i64; size];
        for (p, c) in &self.terms {
            v[p.rank()] = i64::try_from(c.clone()).expect("coefficient fits i64");
        }
        v
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All permutations that fix every entry outside `set` and permute `set`.
fn set_permutations(n: usize, sets: &[Vec<u8>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    for set in sets {
        if set.len() < 2 {
            continue;
        }
        let local = Permutation::all(set.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for base in &out {
            for l in &local {
                let mut images = base.images.clone();
                for (k, &x) in set.iter().enumerate() {
                    images[x as usize - 1] = set[l.images[k] as usize - 1];
                }
                next.push(Permutation { images });
            }
        }
        out = next;
    }
    out
}

fn columns(t: &Numbering) -> Vec<Vec<u8>> {
    let width = t.rows().first().map_or(0, Vec::len);
    (0..width)
        .map(|j| t.rows().iter().filter_map(|r| r.get(j).copied()).collect())
        .collect()
}

/// Row group `R(T)`.
pub fn row_group(t: &Numbering) -> Vec<Permutation> {
    set_permutations(t.n(), t.rows())
}

/// Column group `C(T)`.
pub fn column_group(t: &Numbering) -> Vec<Permutation> {
    set_permutations(t.n(), &columns(t))
}

pub fn young_a(t: &Numbering) -> GroupAlgebraElement {
    let mut x = GroupAlgebraElement::zero(t.n());
    for p in row_group(t) {
        x.add_term(p, BigInt::one());
    }
    x
}

pub fn young_b(t: &Numbering) -> GroupAlgebraElement {
    let mut x = GroupAlgebraElement::zero(t.n());
    for p in column_group(t) {
        let s = p.sign();
        x.add_term(p, BigInt::from(s));
    }
    x
}

pub fn young_c(t: &Numbering) -> GroupAlgebraElement {
    young_b(t).multiply(&young_a(t)).expect("same degree")
}

/// `v_T^S = sigma_{T,S} b_T a_T`, checked against `b_S a_S sigma_{T,S}`.
pub fn v_element(t: &Numbering, s: &Numbering) -> Result<GroupAlgebraElement> {
    let sg = sigma(t, s)?;
    let left = young_c(t).left_mul(&sg);
    debug_assert_eq!(left, young_c(s).right_mul(&sg));
    Ok(left)
}

/// Both formulas for `v_T^S`, for callers that want the equality asserted.
pub fn v_element_checked(t: &Numbering, s: &Numbering) -> Result<GroupAlgebraElement> {
    let sg = sigma(t, s)?;
    let left = young_c(t).left_mul(&sg);
    let right = young_c(s).right_mul(&sg);
    if left != right {
        return Err(Error::Consistency(format!(
            "sigma b a differs from b a sigma for {t} and {s}"
        )));
    }
    Ok(left)
}
