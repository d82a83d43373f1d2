//! Handle and surgery bookkeeping for (m|n)-dimensional pieces.
//!
//! A second component of 0 is the classic limit: it stays pinned at 0
//! through every operation instead of being shifted.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HandleError {
    #[error("index {index} out of range for dimension {ambient}")]
    IndexOutOfRange { ambient: Dim, index: Dim },
    #[error("dimension {0} has no boundary")]
    NoBoundary(Dim),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: Dim, found: Dim },
    #[error("cannot infer the total dimension; add dim(m|n)")]
    UndeterminedDimension,
    #[error("the empty piece has no dimension")]
    EmptyPiece,
    #[error("syntax error at column {}: {message}", position + 1)]
    Syntax { position: usize, message: String },
}

/// Super dimension `m|n`. The derived order is lexicographic and only used
/// for sorting; see [`Dim::componentwise_le`] for the componentwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Dim {
    pub m: u32,
    pub n: u32,
}

impl Dim {
    pub const ZERO: Dim = Dim { m: 0, n: 0 };
    pub const ONE: Dim = Dim { m: 1, n: 1 };

    pub const fn new(m: u32, n: u32) -> Self {
        Dim { m, n }
    }

    pub fn is_classic(self) -> bool {
        self.n == 0
    }

    /// Componentwise `<=`.
    pub fn componentwise_le(self, other: Dim) -> bool {
        self.m <= other.m && self.n <= other.n
    }

    pub fn checked_sub(self, other: Dim) -> Option<Dim> {
        Some(Dim::new(
            self.m.checked_sub(other.m)?,
            self.n.checked_sub(other.n)?,
        ))
    }

    /// Adds `(k|k)`, leaving a classic second component at 0.
    fn shift_up(self, k: u32) -> Dim {
        Dim::new(self.m + k, if self.is_classic() { 0 } else { self.n + k })
    }

    fn shift_down(self, k: u32) -> Option<Dim> {
        Some(Dim::new(
            self.m.checked_sub(k)?,
            if self.is_classic() {
                0
            } else {
                self.n.checked_sub(k)?
            },
        ))
    }

    /// Componentwise maximum.
    pub fn max(self, other: Dim) -> Dim {
        Dim::new(self.m.max(other.m), self.n.max(other.n))
    }
}

impl core::ops::Add for Dim {
    type Output = Dim;

    fn add(self, rhs: Dim) -> Dim {
        Dim::new(self.m + rhs.m, self.n + rhs.n)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.m, self.n)
    }
}

impl FromStr for Dim {
    type Err = HandleError;

    /// `m|n`, or a bare `m` for the classic limit.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HandleError::Syntax {
            position: 0,
            message: format!("malformed dimension {s:?}"),
        };
        let s = s.trim();
        let (m, n) = match s.split_once('|') {
            Some((m, n)) => (m.trim(), n.trim()),
            None => (s, "0"),
        };
        Ok(Dim::new(
            m.parse().map_err(|_| bad())?,
            n.parse().map_err(|_| bad())?,
        ))
    }
}

/// `boundary(D^{m|n}) = S^{m-1|n-1}`.
pub fn boundary_dim(d: Dim) -> Result<Dim, HandleError> {
    d.shift_down(1).ok_or(HandleError::NoBoundary(d))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Piece {
    Empty,
    Sphere(Dim),
    Disk(Dim),
    Product(Box<Piece>, Box<Piece>),
    /// Members kept sorted, so equality ignores order.
    Union(Vec<Piece>),
}

impl Piece {
    pub fn product(a: Piece, b: Piece) -> Piece {
        Piece::Product(Box::new(a), Box::new(b))
    }

    /// Disjoint union; fails unless all members share one dimension.
    pub fn union(mut members: Vec<Piece>) -> Result<Piece, HandleError> {
        let mut dims = members.iter().map(Piece::dim);
        if let Some(first) = dims.next() {
            let first = first.ok_or(HandleError::EmptyPiece)?;
            for d in dims {
                let d = d.ok_or(HandleError::EmptyPiece)?;
                if d != first {
                    return Err(HandleError::DimensionMismatch {
                        expected: first,
                        found: d,
                    });
                }
            }
        }
        members.sort();
        Ok(Piece::Union(members))
    }

    pub fn dim(&self) -> Option<Dim> {
        match self {
            Piece::Empty => None,
            Piece::Sphere(d) | Piece::Disk(d) => Some(*d),
            Piece::Product(a, b) => Some(a.dim()? + b.dim()?),
            Piece::Union(ms) => ms.first().and_then(Piece::dim),
        }
    }

    /// Euler characteristic of the classic limit.
    pub fn euler(&self) -> i64 {
        match self {
            Piece::Empty => 0,
            Piece::Sphere(d) => 1 + sign(d.m),
            Piece::Disk(_) => 1,
            Piece::Product(a, b) => a.euler() * b.euler(),
            Piece::Union(ms) => ms.iter().map(Piece::euler).sum(),
        }
    }
}

fn sign(p: u32) -> i64 {
    if p.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Empty => f.write_str("empty"),
            Piece::Sphere(d) => write!(f, "S{d}"),
            Piece::Disk(d) => write!(f, "D{d}"),
            Piece::Product(a, b) => write!(f, "{a}x{b}"),
            Piece::Union(ms) => {
                let parts: Vec<String> = ms.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(" u "))
            }
        }
    }
}

impl FromStr for Piece {
    type Err = HandleError;

    /// `empty`, `S3|3`, `D2|2`, products with `x`, unions with ` u `.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "empty" {
            return Ok(Piece::Empty);
        }
        let members: Vec<&str> = s.split(" u ").collect();
        if members.len() > 1 {
            return Piece::union(
                members
                    .into_iter()
                    .map(str::parse)
                    .collect::<Result<_, _>>()?,
            );
        }
        let mut factors = s.split('x').map(|atom| {
            let atom = atom.trim();
            let dim = || atom[1..].parse::<Dim>();
            match atom.chars().next() {
                Some('S') => Ok(Piece::Sphere(dim()?)),
                Some('D') => Ok(Piece::Disk(dim()?)),
                _ => Err(HandleError::Syntax {
                    position: 0,
                    message: format!("malformed piece {atom:?}"),
                }),
            }
        });
        let first = factors.next().unwrap_or(Ok(Piece::Empty))?;
        factors.try_fold(first, |acc, f| Ok(Piece::product(acc, f?)))
    }
}

/// Cut out `removed`, glue in `glued` along `glue_locus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryRecord {
    pub ambient_dim: Dim,
    pub index: Dim,
    pub removed: Piece,
    pub glued: Piece,
    pub glue_locus: Piece,
}

/// Surgery of index `p|q` on an `m|n`-dimensional piece.
pub fn surgery(ambient: Dim, index: Dim) -> Result<SurgeryRecord, HandleError> {
    let out_of_range = HandleError::IndexOutOfRange { ambient, index };
    let index_ok = if ambient.is_classic() {
        index.n == 0 && index.m < ambient.m
    } else {
        index.m < ambient.m && index.n < ambient.n
    };
    if !index_ok {
        return Err(out_of_range);
    }
    let complement = ambient.checked_sub(index).ok_or(out_of_range.clone())?;
    let index_up = Dim::new(
        index.m + 1,
        if ambient.is_classic() { 0 } else { index.n + 1 },
    );
    let complement_down = Dim::new(
        complement.m - 1,
        if ambient.is_classic() {
            0
        } else {
            complement.n - 1
        },
    );
    Ok(SurgeryRecord {
        ambient_dim: ambient,
        index,
        removed: Piece::product(Piece::Sphere(index), Piece::Disk(complement)),
        glued: Piece::product(Piece::Disk(index_up), Piece::Sphere(complement_down)),
        glue_locus: Piece::product(Piece::Sphere(index), Piece::Sphere(complement_down)),
    })
}

/// Starting piece of a handle presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Base {
    Empty,
    Disk,
    /// `datum x D^{1|1}`.
    Collar(Piece),
}

/// What attaching one handle does to the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryEffect {
    /// Index `p|q` with `p, q >= 1`: surgery of index `p-1|q-1`.
    Surgery(SurgeryRecord),
    /// Index `0|0`: a disjoint sphere appears.
    DisjointSphere(Piece),
    /// Top index: a sphere component is capped off.
    Cap(Piece),
}

/// `base` followed by handle attachments, each step a union of equal or
/// unequal indices attached simultaneously.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HandlePresentation {
    total_dim: Dim,
    base: Base,
    steps: Vec<Vec<Dim>>,
}

impl HandlePresentation {
    pub fn new(total_dim: Dim, base: Base) -> Result<Self, HandleError> {
        if let Base::Collar(datum) = &base {
            let d = datum.dim().ok_or(HandleError::EmptyPiece)?;
            let expected = boundary_dim(total_dim)?;
            if d != expected {
                return Err(HandleError::DimensionMismatch { expected, found: d });
            }
        }
        Ok(HandlePresentation {
            total_dim,
            base,
            steps: Vec::new(),
        })
    }

    pub fn total_dim(&self) -> Dim {
        self.total_dim
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn steps(&self) -> &[Vec<Dim>] {
        &self.steps
    }

    /// All handle indices in attachment order.
    pub fn handles(&self) -> impl Iterator<Item = Dim> + '_ {
        self.steps.iter().flatten().copied()
    }

    fn effect(&self, index: Dim) -> Result<BoundaryEffect, HandleError> {
        let total = self.total_dim;
        let out_of_range = || HandleError::IndexOutOfRange {
            ambient: total,
            index,
        };
        if total.is_classic() && index.n != 0 {
            return Err(out_of_range());
        }
        if index == Dim::ZERO {
            return Ok(match boundary_dim(total) {
                Ok(bd) => BoundaryEffect::DisjointSphere(Piece::Sphere(bd)),
                Err(_) => BoundaryEffect::DisjointSphere(Piece::Empty),
            });
        }
        let bd = boundary_dim(total)?;
        if index == total {
            return Ok(BoundaryEffect::Cap(Piece::Sphere(bd)));
        }
        let shifted = index
            .shift_down(1)
            .filter(|_| total.is_classic() || index.n >= 1)
            .ok_or_else(out_of_range)?;
        surgery(bd, shifted)
            .map(BoundaryEffect::Surgery)
            .map_err(|_| out_of_range())
    }

    /// Attaches one handle as its own step.
    pub fn attach(&self, index: Dim) -> Result<(Self, BoundaryEffect), HandleError> {
        let (pres, mut effects) = self.attach_union(&[index])?;
        Ok((pres, effects.remove(0)))
    }

    /// Attaches several handles simultaneously as one step.
    pub fn attach_union(
        &self,
        indices: &[Dim],
    ) -> Result<(Self, Vec<BoundaryEffect>), HandleError> {
        let effects = indices
            .iter()
            .map(|&i| self.effect(i))
            .collect::<Result<Vec<_>, _>>()?;
        let mut step = indices.to_vec();
        step.sort();
        let mut pres = self.clone();
        if !step.is_empty() {
            pres.steps.push(step);
        }
        Ok((pres, effects))
    }

    /// Euler characteristic of the classic limit: base plus `sum (-1)^p`.
    pub fn euler_characteristic(&self) -> i64 {
        let base = match &self.base {
            Base::Empty => 0,
            Base::Disk => 1,
            Base::Collar(datum) => datum.euler(),
        };
        base + self.handles().map(|h| sign(h.m)).sum::<i64>()
    }
}

/// Attaches `index` to `pres`, returning the new presentation and the
/// induced change of boundary.
pub fn attach_handle(
    pres: &HandlePresentation,
    index: Dim,
) -> Result<(HandlePresentation, BoundaryEffect), HandleError> {
    pres.attach(index)
}

/// The trace cobordism `W = datum x D^{1|1} + h`. With no index it is the
/// bare collar.
pub fn cobordism_from_surgery(
    datum: Piece,
    index: Option<Dim>,
) -> Result<HandlePresentation, HandleError> {
    let d = datum.dim().ok_or(HandleError::EmptyPiece)?;
    let pres = HandlePresentation::new(d.shift_up(1), Base::Collar(datum))?;
    match index {
        None => Ok(pres),
        Some(i) => match pres.attach(i)? {
            (w, BoundaryEffect::Surgery(_)) => Ok(w),
            _ => Err(HandleError::IndexOutOfRange {
                ambient: d.shift_up(1),
                index: i,
            }),
        },
    }
}

pub fn euler_characteristic(pres: &HandlePresentation) -> i64 {
    pres.euler_characteristic()
}

impl fmt::Display for HandlePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim({})", self.total_dim)?;
        match &self.base {
            Base::Empty => {}
            Base::Disk => f.write_str(" + base(disk)")?,
            Base::Collar(p) => write!(f, " + base(collar:{p})")?,
        }
        for step in &self.steps {
            let parts: Vec<String> = step.iter().map(|d| format!("h({d})")).collect();
            write!(f, " + {}", parts.join(" u "))?;
        }
        Ok(())
    }
}

fn syntax(position: usize, message: impl Into<String>) -> HandleError {
    HandleError::Syntax {
        position,
        message: message.into(),
    }
}

/// Reads `dim(m|n)`, `base(...)` and `h(p|q) u h(p|q)` terms joined by `+`.
/// Without `dim(...)` the total dimension is the collar's datum plus `1|1`,
/// else the componentwise maximum handle index.
pub fn parse_presentation(text: &str) -> Result<HandlePresentation, HandleError> {
    let mut dim = None;
    let mut base = Base::Empty;
    let mut steps: Vec<Vec<Dim>> = Vec::new();
    let mut offset = 0;
    for term in text.split('+') {
        let at = offset + (term.len() - term.trim_start().len());
        offset += term.len() + 1;
        let term = term.trim();
        if let Some(inner) = call(term, "dim") {
            dim = Some(
                inner
                    .parse::<Dim>()
                    .map_err(|_| syntax(at, "malformed dim(...)"))?,
            );
        } else if let Some(inner) = call(term, "base") {
            base = match inner.trim() {
                "empty" => Base::Empty,
                "disk" => Base::Disk,
                other => match other.strip_prefix("collar:") {
                    Some(p) => Base::Collar(
                        p.parse()
                            .map_err(|_| syntax(at, "malformed collar datum"))?,
                    ),
                    None => return Err(syntax(at, format!("unknown base {other:?}"))),
                },
            };
        } else {
            let mut step = Vec::new();
            for h in term.split('u') {
                let inner = call(h.trim(), "h")
                    .ok_or_else(|| syntax(at, format!("expected h(p|q), found {:?}", h.trim())))?;
                step.push(
                    inner
                        .parse::<Dim>()
                        .map_err(|_| syntax(at, "malformed handle index"))?,
                );
            }
            steps.push(step);
        }
    }
    let total = match (dim, &base) {
        (Some(d), _) => d,
        (None, Base::Collar(p)) => p.dim().ok_or(HandleError::EmptyPiece)?.shift_up(1),
        (None, _) => steps
            .iter()
            .flatten()
            .copied()
            .reduce(Dim::max)
            .ok_or(HandleError::UndeterminedDimension)?,
    };
    let mut pres = HandlePresentation::new(total, base)?;
    for step in &steps {
        pres = pres.attach_union(step)?.0;
    }
    Ok(pres)
}

fn call<'a>(term: &'a str, name: &str) -> Option<&'a str> {
    term.strip_prefix(name)?
        .trim_start()
        .strip_prefix('(')?
        .strip_suffix(')')
}

impl FromStr for HandlePresentation {
    type Err = HandleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_presentation(s)
    }
}
