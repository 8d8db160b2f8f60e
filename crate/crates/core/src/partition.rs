//! Integer partitions and the label sets built from them.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts; the zero
//! partition is the empty list. Besides the usual diagram operations this
//! module provides the class `B` of partitions whose parts all occur an even
//! number of times, the classes `B_r` of `B`-partitions with a horizontal
//! strip of length `r` attached, and graded enumeration under conjunctive
//! constraints ([`enumerate`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part with 0-based index, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest_part() as usize;
        let mut parts = vec![0u32; width];
        for &row in &self.parts {
            for c in parts.iter_mut().take(row as usize) {
                *c += 1;
            }
        }
        Partition { parts }
    }

    /// True iff the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(inner, outer)| inner <= outer)
    }

    /// True iff `self / inner` is a horizontal strip, i.e. `inner ⊆ self` and
    /// `self[i+1] <= inner[i]` for every row.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.length()).all(|i| self.part(i + 1) <= inner.part(i))
    }

    /// Membership in `B`: every part occurs an even number of times.
    pub fn is_doubled(&self) -> bool {
        self.parts.len().is_multiple_of(2) && self.parts.chunks(2).all(|c| c[0] == c[1])
    }

    /// The unique `B`-partition `μ` with `self / μ` a horizontal strip, and
    /// the strip length. Rows `2i-1` and `2i` of `μ` both equal row `2i` of
    /// `self`.
    pub fn doubled_core(&self) -> (Partition, u32) {
        let mut core = Vec::with_capacity(self.length());
        for i in (0..self.length()).step_by(2) {
            let v = self.part(i + 1);
            core.push(v);
            core.push(v);
        }
        let core = Partition::from_unsorted(core);
        let r = self.weight() - core.weight();
        (core, r)
    }

    /// Membership in `B_r`.
    pub fn in_class_br(&self, r: u32) -> bool {
        self.doubled_core().1 == r
    }

    /// True iff `self[m] <= n` (0-based `m`), i.e. the diagram lies in the
    /// `(m, n)`-hook.
    pub fn in_hook(&self, m: usize, n: u32) -> bool {
        self.part(m) <= n
    }

    /// Sum of `(i-1) * λ_i`.
    pub fn n_statistic(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Cells as `(row, col)` pairs, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// Hook length of the cell `(i, j)`; `conj` must be the conjugate.
    pub fn hook_length(&self, conj: &Partition, i: usize, j: usize) -> u32 {
        (self.part(i) - j as u32) + (conj.part(j) - i as u32) - 1
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Restriction to `B` or one of the `B_r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartitionClass {
    #[default]
    All,
    B,
    Br(u32),
}

impl PartitionClass {
    pub fn admits(&self, p: &Partition) -> bool {
        match *self {
            PartitionClass::All => true,
            PartitionClass::B => p.is_doubled(),
            PartitionClass::Br(r) => p.in_class_br(r),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightBound {
    Exact(u32),
    /// Inclusive.
    AtMost(u32),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumConstraints {
    pub max_part: Option<u32>,
    pub max_length: Option<usize>,
    /// `(m, n)`: `λ_{m+1} <= n`.
    pub hook: Option<(usize, u32)>,
    pub class: PartitionClass,
    pub weight: Option<WeightBound>,
}

impl EnumConstraints {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn max_part(mut self, p: u32) -> Self {
        self.max_part = Some(p);
        self
    }

    pub fn max_length(mut self, k: usize) -> Self {
        self.max_length = Some(k);
        self
    }

    pub fn hook(mut self, m: usize, n: u32) -> Self {
        self.hook = Some((m, n));
        self
    }

    pub fn class(mut self, class: PartitionClass) -> Self {
        self.class = class;
        self
    }

    pub fn weight_at_most(mut self, w: u32) -> Self {
        self.weight = Some(WeightBound::AtMost(w));
        self
    }

    pub fn weight_exact(mut self, w: u32) -> Self {
        self.weight = Some(WeightBound::Exact(w));
        self
    }

    pub fn admits(&self, p: &Partition) -> bool {
        self.max_part.is_none_or(|b| p.largest_part() <= b)
            && self.max_length.is_none_or(|b| p.length() <= b)
            && self.hook.is_none_or(|(m, n)| p.in_hook(m, n))
            && self.weight.is_none_or(|w| match w {
                WeightBound::Exact(w) => p.weight() == w,
                WeightBound::AtMost(w) => p.weight() <= w,
            })
            && self.class.admits(p)
    }

    /// Part and length bounds implied by all constraints together.
    fn effective_bounds(&self) -> (Option<u32>, Option<usize>) {
        let mut part = self.max_part;
        let mut len = self.max_length;
        if let Some((m, n)) = self.hook {
            if m == 0 {
                part = Some(part.map_or(n, |p| p.min(n)));
            }
            if n == 0 || part == Some(0) {
                len = Some(len.map_or(m, |l| l.min(m)));
            }
        }
        if part == Some(0) || len == Some(0) {
            return (Some(0), Some(0));
        }
        (part, len)
    }

    /// Largest weight any admitted partition can have, if finite.
    pub fn max_weight(&self) -> Option<u32> {
        let (part, len) = self.effective_bounds();
        let finite = match (part, len) {
            (Some(p), Some(l)) => Some(p * l as u32),
            _ => None,
        };
        let bound = self.weight.map(|w| match w {
            WeightBound::Exact(w) | WeightBound::AtMost(w) => w,
        });
        match (finite, bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

/// Graded stream of partitions: weight ascending, then descending
/// lexicographic order on the parts.
#[derive(Clone, Debug)]
pub struct PartitionStream {
    constraints: EnumConstraints,
    max_part: Option<u32>,
    max_length: Option<usize>,
    next_weight: u32,
    last_weight: u32,
    buffer: std::vec::IntoIter<Partition>,
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(p) = self.buffer.next() {
                return Some(p);
            }
            if self.next_weight > self.last_weight {
                return None;
            }
            let w = self.next_weight;
            self.next_weight += 1;
            let mut out = Vec::new();
            let mut current = Vec::new();
            self.fill(w, w, &mut current, &mut out);
            self.buffer = out.into_iter();
        }
    }
}

impl PartitionStream {
    fn fill(&self, remaining: u32, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let p = Partition {
                parts: current.clone(),
            };
            if self.constraints.admits(&p) {
                out.push(p);
            }
            return;
        }
        let row = current.len();
        if self.max_length.is_some_and(|l| row >= l) {
            return;
        }
        let mut top = cap.min(remaining);
        if let Some(p) = self.max_part {
            top = top.min(p);
        }
        if let Some((m, n)) = self.constraints.hook {
            if row >= m {
                top = top.min(n);
            }
        }
        for part in (1..=top).rev() {
            current.push(part);
            self.fill(remaining - part, part, current, out);
            current.pop();
        }
    }
}

/// Every partition admitted by `c`, each exactly once, in graded order.
pub fn enumerate(c: EnumConstraints) -> Result<PartitionStream> {
    let last_weight = c.max_weight().ok_or(Error::UnboundedEnumeration)?;
    let first_weight = match c.weight {
        Some(WeightBound::Exact(w)) => w,
        _ => 0,
    };
    let (max_part, max_length) = c.effective_bounds();
    Ok(PartitionStream {
        constraints: c,
        max_part,
        max_length,
        next_weight: first_weight,
        last_weight,
        buffer: Vec::new().into_iter(),
    })
}
