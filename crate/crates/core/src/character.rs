//! Character expansions over Schur labels.
//!
//! Every family handled here has a character of the form
//! `prefactor * Σ_λ s_λ`, with all coefficients equal to one and the sum
//! running over a constraint set of partitions. A [`CharExpansion`] stores
//! the label stream and the prefactor exponents only.
//!
//! Sign conventions differ between families (some are written in
//! `x_i = e^{ε_i}`, the orthosymplectic ones in `x_i = e^{-ε_i}`,
//! `y_j = e^{-δ_j}`). The prefactor is recorded as printed for each family,
//! and every specialization consumes labels through `|λ|` only, so the
//! convention never reaches downstream code.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate, EnumConstraints, Partition, PartitionClass};
use crate::report::{Mismatch, Params, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `so(2k+1)`, labels `[0,…,0,p]`.
    SoOddRect,
    /// `so(2k)`, labels `[0,…,0,r,p−r]`.
    SoEvenFork,
    /// `osp(1|2n)`, labels `[0,…,0,−p]`.
    Osp1Rect,
    /// `osp(2m+1|2n)`, labels `[0,…,0,p]`.
    OspOddRect,
    /// `osp(2m|2n)`, labels `[0,…,0,p]`.
    OspEvenRect,
    /// `osp(2m|2n)`, labels `[0,…,0,r,p−r]` (conjectured expansion).
    OspEvenForkConj,
}

impl Family {
    pub fn is_osp(self) -> bool {
        matches!(self, Family::OspOddRect | Family::OspEvenRect | Family::OspEvenForkConj)
    }

    pub fn is_fork(self) -> bool {
        matches!(self, Family::SoEvenFork | Family::OspEvenForkConj)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::SoOddRect => "SoOddRect",
            Family::SoEvenFork => "SoEvenFork",
            Family::Osp1Rect => "Osp1Rect",
            Family::OspOddRect => "OspOddRect",
            Family::OspEvenRect => "OspEvenRect",
            Family::OspEvenForkConj => "OspEvenForkConj",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rank data. `Single(k)` is the rank of the `gl(k)` subalgebra whose
/// Schur functions label the expansion; `Super` carries `gl(m|n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ranks {
    Single(usize),
    Super { m: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prefactor {
    pub x_exp: BigRational,
    pub y_exp: BigRational,
}

impl Prefactor {
    fn half(p: u32, x_sign: i64, y_sign: i64) -> Self {
        let half = |s: i64| BigRational::new(BigInt::from(s * p as i64), BigInt::from(2));
        Prefactor {
            x_exp: half(x_sign),
            y_exp: half(y_sign),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharExpansion {
    pub family: Family,
    pub ranks: Ranks,
    pub r: Option<u32>,
    pub p: u32,
    pub prefactor: Prefactor,
    /// Largest label weight kept (inclusive).
    pub cutoff: u32,
    /// True when no label of the full character was dropped by the cutoff.
    pub complete: bool,
    pub conjectural: bool,
    pub terms: Vec<(Partition, BigInt)>,
}

impl CharExpansion {
    fn build(
        family: Family,
        ranks: Ranks,
        r: Option<u32>,
        p: u32,
        prefactor: Prefactor,
        constraints: EnumConstraints,
        cutoff: Option<u32>,
    ) -> Result<Self> {
        let natural = constraints.max_weight();
        let cutoff = match (natural, cutoff) {
            (_, Some(w)) => w,
            (Some(w), None) => w,
            (None, None) => return Err(Error::UnboundedEnumeration),
        };
        let complete = natural.is_some_and(|w| w <= cutoff);
        let terms = enumerate(constraints.weight_at_most(cutoff))?
            .map(|lam| (lam, BigInt::from(1)))
            .collect();
        Ok(CharExpansion {
            family,
            ranks,
            r,
            p,
            prefactor,
            cutoff,
            complete,
            conjectural: family == Family::OspEvenForkConj,
            terms,
        })
    }

    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.terms.iter().map(|(p, _)| p)
    }

    pub fn label_vec(&self) -> Vec<Partition> {
        self.labels().cloned().collect()
    }

    /// True iff every label of weight `<= degree` is present.
    pub fn covers_degree(&self, degree: u32) -> bool {
        self.complete || self.cutoff >= degree
    }

    /// Label → total coefficient.
    pub fn coefficient_map(&self) -> BTreeMap<Partition, BigInt> {
        let mut map = BTreeMap::new();
        for (lam, c) in &self.terms {
            *map.entry(lam.clone()).or_insert_with(BigInt::zero) += c;
        }
        map
    }

    pub fn dynkin_labels(&self) -> DynkinLabels {
        let (algebra, rank) = match (self.family, self.ranks) {
            (Family::SoOddRect, Ranks::Single(k)) => (Algebra::B, k),
            (Family::SoEvenFork, Ranks::Single(k)) => (Algebra::D, k),
            (Family::Osp1Rect, Ranks::Single(n)) => (Algebra::B0n, n),
            (Family::OspOddRect, Ranks::Super { m, n }) => (Algebra::Bmn, m + n),
            (_, Ranks::Super { m, n }) => (Algebra::Dmn, m + n),
            _ => unreachable!("family and ranks are set together by the builders"),
        };
        let mut labels = vec![0i64; rank];
        match self.family {
            Family::Osp1Rect => labels[rank - 1] = -(self.p as i64),
            f if f.is_fork() => {
                let r = self.r.unwrap_or(0);
                labels[rank - 2] = r as i64;
                labels[rank - 1] = (self.p - r) as i64;
            }
            _ => labels[rank - 1] = self.p as i64,
        }
        DynkinLabels { algebra, labels }
    }
}

impl Serialize for CharExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a Partition,
            coeff: i64,
        }
        #[derive(Serialize)]
        struct Pre {
            x_exp: String,
            y_exp: String,
        }
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("family", self.family.name())?;
        match self.ranks {
            Ranks::Single(k) if self.family == Family::Osp1Rect => map.serialize_entry("n", &k)?,
            Ranks::Single(k) => map.serialize_entry("k", &k)?,
            Ranks::Super { m, n } => {
                map.serialize_entry("m", &m)?;
                map.serialize_entry("n", &n)?;
            }
        }
        if let Some(r) = self.r {
            map.serialize_entry("r", &r)?;
        }
        map.serialize_entry("p", &self.p)?;
        map.serialize_entry(
            "prefactor",
            &Pre {
                x_exp: self.prefactor.x_exp.to_string(),
                y_exp: self.prefactor.y_exp.to_string(),
            },
        )?;
        map.serialize_entry("cutoff", &self.cutoff)?;
        if self.conjectural {
            map.serialize_entry("conjectural", &true)?;
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(partition, c)| Term {
                partition,
                coeff: i64::try_from(c).expect("label coefficients are small"),
            })
            .collect();
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    /// `so(2k+1)`
    B,
    /// `so(2k)`
    D,
    /// `osp(2m+1|2n)`
    Bmn,
    /// `osp(2m|2n)`
    Dmn,
    /// `osp(1|2n)`
    B0n,
}

/// Dynkin labels in the distinguished simple-root order. For the `D`
/// types the last two entries sit on the fork nodes `ε_{k-1} − ε_k` and
/// `ε_{k-1} + ε_k`, in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinLabels {
    pub algebra: Algebra,
    pub labels: Vec<i64>,
}

impl DynkinLabels {
    pub fn new(algebra: Algebra, labels: Vec<i64>) -> Result<Self> {
        let fork = matches!(algebra, Algebra::D | Algebra::Dmn);
        let free = if fork { 2 } else { 1 };
        let bad = |why: &str| Error::InvalidLabels(format!("{labels:?}: {why}"));
        if labels.len() < free {
            return Err(bad("too few nodes"));
        }
        let head = labels.len() - free;
        if labels[..head].iter().any(|&l| l != 0) {
            return Err(bad("only the last node (or the two fork nodes) may be nonzero"));
        }
        let tail_ok = match algebra {
            Algebra::B0n => labels[head] <= 0,
            _ => labels[head..].iter().all(|&l| l >= 0),
        };
        if !tail_ok {
            return Err(bad("label sign"));
        }
        Ok(DynkinLabels { algebra, labels })
    }

    pub fn rectangle(algebra: Algebra, rank: usize, p: u32) -> Result<Self> {
        let mut labels = vec![0; rank];
        if rank == 0 {
            return Err(Error::InvalidRank("rank 0".into()));
        }
        labels[rank - 1] = if algebra == Algebra::B0n { -(p as i64) } else { p as i64 };
        DynkinLabels::new(algebra, labels)
    }

    pub fn fork(algebra: Algebra, rank: usize, r: u32, p: u32) -> Result<Self> {
        if r > p {
            return Err(Error::InvalidLabels(format!("r = {r} exceeds p = {p}")));
        }
        if rank < 2 {
            return Err(Error::InvalidRank(format!("fork needs rank >= 2, got {rank}")));
        }
        let mut labels = vec![0; rank];
        labels[rank - 2] = r as i64;
        labels[rank - 1] = (p - r) as i64;
        DynkinLabels::new(algebra, labels)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// `(r, p)` for a `D`-type label `[0,…,0,r,p−r]`.
    pub fn fork_params(&self) -> Option<(u32, u32)> {
        match self.algebra {
            Algebra::D | Algebra::Dmn => {
                let n = self.labels.len();
                let r = self.labels[n - 2] as u32;
                Some((r, r + self.labels[n - 1] as u32))
            }
            _ => None,
        }
    }

    /// `p` for a `B`-type label `[0,…,0,±p]`.
    pub fn rectangle_p(&self) -> Option<u32> {
        match self.algebra {
            Algebra::B | Algebra::Bmn | Algebra::B0n => Some(self.labels[self.labels.len() - 1].unsigned_abs() as u32),
            _ => None,
        }
    }
}

impl fmt::Display for DynkinLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn fork_class(r: u32, p: u32, odd: bool) -> PartitionClass {
    PartitionClass::Br(if odd { p - r } else { r })
}

fn check_super_ranks(m: usize, n: usize) -> Result<()> {
    if m + n == 0 {
        return Err(Error::InvalidRank("m + n must be positive".into()));
    }
    Ok(())
}

/// `so(2k+1)` with labels `[0,…,0,p]`: every `λ` in the `k × p` rectangle.
pub fn char_so_odd(k: usize, p: u32) -> Result<CharExpansion> {
    if k == 0 {
        return Err(Error::InvalidRank("so(2k+1) needs k >= 1".into()));
    }
    CharExpansion::build(
        Family::SoOddRect,
        Ranks::Single(k),
        None,
        p,
        Prefactor::half(p, -1, 0),
        EnumConstraints::new().max_part(p).max_length(k),
        None,
    )
}

/// `osp(1|2n)` with labels `[0,…,0,−p]`: all `λ` with `ℓ(λ) <= min(n, p)`,
/// truncated at weight `cutoff`.
pub fn char_osp1(n: usize, p: u32, cutoff: u32) -> Result<CharExpansion> {
    if n == 0 {
        return Err(Error::InvalidRank("osp(1|2n) needs n >= 1".into()));
    }
    CharExpansion::build(
        Family::Osp1Rect,
        Ranks::Single(n),
        None,
        p,
        Prefactor::half(p, 1, 0),
        EnumConstraints::new().max_length(n.min(p as usize)),
        Some(cutoff),
    )
}

/// `osp(2m+1|2n)` with labels `[0,…,0,p]`: `λ` in the `(m, n)`-hook with
/// `λ_1 <= p`.
pub fn char_osp_odd(m: usize, n: usize, p: u32, cutoff: u32) -> Result<CharExpansion> {
    check_super_ranks(m, n)?;
    CharExpansion::build(
        Family::OspOddRect,
        Ranks::Super { m, n },
        None,
        p,
        Prefactor::half(p, -1, 1),
        EnumConstraints::new().hook(m, n as u32).max_part(p),
        Some(cutoff),
    )
}

/// `osp(2m|2n)` with labels `[0,…,0,p]`: `λ ∈ B` in the `(m, n)`-hook with
/// `λ_1 <= p`.
pub fn char_osp_even(m: usize, n: usize, p: u32, cutoff: u32) -> Result<CharExpansion> {
    check_super_ranks(m, n)?;
    CharExpansion::build(
        Family::OspEvenRect,
        Ranks::Super { m, n },
        None,
        p,
        Prefactor::half(p, -1, 1),
        EnumConstraints::new()
            .hook(m, n as u32)
            .max_part(p)
            .class(PartitionClass::B),
        Some(cutoff),
    )
}

/// `so(2k)` fork labels `[0,…,0,r,p−r]`: `λ` in the `k × p` rectangle and in
/// `B_r` (k even) or `B_{p−r}` (k odd).
pub fn char_so_even_fork(k: usize, r: u32, p: u32) -> Result<CharExpansion> {
    if r > p {
        return Err(Error::InvalidLabels(format!("r = {r} exceeds p = {p}")));
    }
    if k < 2 {
        return Err(Error::InvalidRank("so(2k) fork needs k >= 2".into()));
    }
    CharExpansion::build(
        Family::SoEvenFork,
        Ranks::Single(k),
        Some(r),
        p,
        Prefactor::half(p, -1, 0),
        EnumConstraints::new()
            .max_part(p)
            .max_length(k)
            .class(fork_class(r, p, k % 2 == 1)),
        None,
    )
}

/// Conjectured `osp(2m|2n)` fork expansion: `λ` in the `(m, n)`-hook with
/// `λ_1 <= p`, in `B_r` when `|m − n|` is even and in `B_{p−r}` when odd.
pub fn char_osp_even_fork_conj(m: usize, n: usize, r: u32, p: u32, cutoff: u32) -> Result<CharExpansion> {
    if r > p {
        return Err(Error::InvalidLabels(format!("r = {r} exceeds p = {p}")));
    }
    check_super_ranks(m, n)?;
    CharExpansion::build(
        Family::OspEvenForkConj,
        Ranks::Super { m, n },
        Some(r),
        p,
        Prefactor::half(p, -1, 1),
        EnumConstraints::new()
            .hook(m, n as u32)
            .max_part(p)
            .class(fork_class(r, p, m.abs_diff(n) % 2 == 1)),
        Some(cutoff),
    )
}

/// Graded order: weight first, then descending lexicographic.
pub(crate) fn graded_cmp(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    a.weight().cmp(&b.weight()).then_with(|| b.parts().cmp(a.parts()))
}

/// Compares two label → coefficient maps, reporting the graded-first label
/// whose totals differ.
pub fn first_label_mismatch(
    lhs: &BTreeMap<Partition, BigInt>,
    rhs: &BTreeMap<Partition, BigInt>,
) -> Option<Mismatch> {
    let zero = BigInt::zero();
    let mut keys: Vec<&Partition> = lhs.keys().chain(rhs.keys()).collect();
    keys.sort_by(|a, b| graded_cmp(a, b));
    keys.dedup();
    keys.into_iter().find_map(|lam| {
        let a = lhs.get(lam).unwrap_or(&zero);
        let b = rhs.get(lam).unwrap_or(&zero);
        (a != b).then(|| Mismatch::Label {
            partition: lam.clone(),
            lhs: a.clone(),
            rhs: b.clone(),
        })
    })
}

/// Checks `Σ_{r=0}^{p} fork(r, p−r) = rectangle(p)` label by label, up to
/// weight `cutoff`.
///
/// `Ranks::Single(k)` compares `so(2k+1)` against the `so(2k)` forks;
/// `Ranks::Super { m, n }` compares `osp(2m+1|2n)` against the conjectured
/// `osp(2m|2n)` forks. For the finite case `cutoff = None` means `k·p`, and
/// a smaller cutoff produces a warning in the report.
pub fn check_fork_sum(ranks: Ranks, p: u32, cutoff: Option<u32>) -> Result<VerificationReport> {
    let (identity, params, lhs, forks, warning) = match ranks {
        Ranks::Single(k) => {
            let full = k as u32 * p;
            let w = cutoff.unwrap_or(full);
            let lhs = char_so_odd(k, p)?;
            let forks = (0..=p)
                .map(|r| char_so_even_fork(k, r, p))
                .collect::<Result<Vec<_>>>()?;
            let warning = (w < full).then(|| format!("cutoff {w} is below k*p = {full}; check is partial"));
            (
                "e28",
                Params::new().with("k", k as i64).with("p", p).with("W", w),
                truncate_map(&lhs, w),
                forks.iter().map(|f| truncate_map(f, w)).collect::<Vec<_>>(),
                warning,
            )
        }
        Ranks::Super { m, n } => {
            let w = cutoff.ok_or(Error::UnboundedEnumeration)?;
            let lhs = char_osp_odd(m, n, p, w)?;
            let forks = (0..=p)
                .map(|r| char_osp_even_fork_conj(m, n, r, p, w))
                .collect::<Result<Vec<_>>>()?;
            (
                "e28b (osp reading)",
                Params::new()
                    .with("m", m as i64)
                    .with("n", n as i64)
                    .with("p", p)
                    .with("W", w),
                lhs.coefficient_map(),
                forks.iter().map(|f| f.coefficient_map()).collect(),
                None,
            )
        }
    };
    let mut rhs: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for f in forks {
        for (lam, c) in f {
            *rhs.entry(lam).or_insert_with(BigInt::zero) += c;
        }
    }
    let report = VerificationReport::new(identity, params, first_label_mismatch(&lhs, &rhs));
    Ok(match warning {
        Some(w) => report.with_warning(w),
        None => report,
    })
}

fn truncate_map(e: &CharExpansion, w: u32) -> BTreeMap<Partition, BigInt> {
    e.coefficient_map()
        .into_iter()
        .filter(|(lam, _)| lam.weight() <= w)
        .collect()
}
