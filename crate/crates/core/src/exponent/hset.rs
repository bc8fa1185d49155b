use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cones::PowerFamily;

/// Integer lattices that lie in every H-set of the matching power family.
/// `Naturals` is the positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lattice {
    Naturals,
    #[serde(rename = "odd")]
    OddNaturals,
    #[serde(rename = "even")]
    EvenNaturals,
    None,
}

impl Lattice {
    pub fn for_family(family: PowerFamily) -> Lattice {
        match family {
            PowerFamily::Plain => Lattice::Naturals,
            PowerFamily::Odd => Lattice::OddNaturals,
            PowerFamily::Even => Lattice::EvenNaturals,
        }
    }

    pub fn contains(self, alpha: f64) -> bool {
        if alpha < 1.0 || alpha.fract() != 0.0 || !alpha.is_finite() {
            return false;
        }
        let odd = alpha % 2.0 == 1.0;
        match self {
            Lattice::Naturals => true,
            Lattice::OddNaturals => odd,
            Lattice::EvenNaturals => !odd,
            Lattice::None => false,
        }
    }

    /// Smallest lattice point, `None` for the empty lattice.
    pub fn least(self) -> Option<f64> {
        match self {
            Lattice::Naturals | Lattice::OddNaturals => Some(1.0),
            Lattice::EvenNaturals => Some(2.0),
            Lattice::None => None,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Lattice::Naturals => "ℕ",
            Lattice::OddNaturals => "(−1+2ℕ)",
            Lattice::EvenNaturals => "2ℕ",
            Lattice::None => "∅",
        }
    }
}

/// `lattice ∪ points ∪ [ray_start, ∞)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Shape {
    pub lattice: Lattice,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<f64>,
    pub ray_start: f64,
}

impl Shape {
    pub fn ray(ray_start: f64) -> Shape {
        Shape {
            lattice: Lattice::None,
            points: Vec::new(),
            ray_start,
        }
    }

    pub fn new(lattice: Lattice, ray_start: f64) -> Shape {
        Shape {
            lattice,
            points: Vec::new(),
            ray_start,
        }
    }

    pub fn with_points(mut self, points: &[f64]) -> Shape {
        self.points = points.to_vec();
        self
    }

    pub fn contains(&self, alpha: f64) -> bool {
        alpha >= self.ray_start || self.lattice.contains(alpha) || self.points.contains(&alpha)
    }

    /// Same set with absorbed lattices and redundant points removed.
    pub fn normalised(&self) -> Shape {
        let lattice = if self.lattice_absorbed() {
            Lattice::None
        } else {
            self.lattice
        };
        let mut points: Vec<f64> = self
            .points
            .iter()
            .copied()
            .filter(|&p| p < self.ray_start && !lattice.contains(p))
            .collect();
        points.sort_by(f64::total_cmp);
        points.dedup();
        Shape {
            lattice,
            points,
            ray_start: self.ray_start,
        }
    }

    /// True when no lattice point lies below the ray.
    fn lattice_absorbed(&self) -> bool {
        self.lattice.least().is_none_or(|l| l >= self.ray_start)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.lattice_absorbed() {
            write!(f, "{} ∪ ", self.lattice.symbol())?;
        }
        let below: Vec<String> = self
            .points
            .iter()
            .filter(|&&p| p < self.ray_start && !self.lattice.contains(p))
            .map(|p| fmt_real(*p))
            .collect();
        if !below.is_empty() {
            write!(f, "{{{}}} ∪ ", below.join(", "))?;
        }
        write!(f, "[{},∞)", fmt_real(self.ray_start))
    }
}

fn fmt_real(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

/// Three-valued membership answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Member,
    NonMember,
    Unknown,
}

/// A set of exponents, either known exactly or bracketed between an inner
/// and an outer shape with some known exclusions.
///
/// For partial sets the top-level shape is the outer bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HSet {
    pub lattice: Lattice,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<f64>,
    pub ray_start: f64,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<Shape>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<Shape>,
    #[serde(default)]
    pub exclusions: Vec<f64>,
}

impl HSet {
    pub fn exact(shape: Shape) -> HSet {
        HSet {
            lattice: shape.lattice,
            points: shape.points,
            ray_start: shape.ray_start,
            exact: true,
            inner: None,
            outer: None,
            exclusions: Vec::new(),
        }
    }

    pub fn partial(inner: Shape, outer: Shape, exclusions: Vec<f64>) -> HSet {
        HSet {
            lattice: outer.lattice,
            points: outer.points.clone(),
            ray_start: outer.ray_start,
            exact: false,
            inner: Some(inner),
            outer: Some(outer),
            exclusions,
        }
    }

    /// The top-level shape: the set itself if exact, else the outer bound.
    pub fn shape(&self) -> Shape {
        Shape {
            lattice: self.lattice,
            points: self.points.clone(),
            ray_start: self.ray_start,
        }
    }

    /// Critical exponent when exact; the least possible one otherwise.
    pub fn critical_exponent(&self) -> f64 {
        self.ray_start
    }

    pub fn membership(&self, alpha: f64) -> Membership {
        if self.exact {
            return if self.shape().contains(alpha) {
                Membership::Member
            } else {
                Membership::NonMember
            };
        }
        if self.exclusions.contains(&alpha) {
            return Membership::NonMember;
        }
        if self.inner.as_ref().is_some_and(|s| s.contains(alpha)) {
            return Membership::Member;
        }
        if !self.shape().contains(alpha) {
            return Membership::NonMember;
        }
        Membership::Unknown
    }

    /// No grid point where one set answers `Member` and the other
    /// `NonMember`. The grid is `k / denominator` for `k ≤ max * denominator`.
    pub fn compatible_with(&self, other: &HSet, max: f64, denominator: u32) -> bool {
        rational_grid(max, denominator).all(|a| {
            !matches!(
                (self.membership(a), other.membership(a)),
                (Membership::Member, Membership::NonMember)
                    | (Membership::NonMember, Membership::Member)
            )
        })
    }

    /// `inner ⊆ outer` on the same kind of grid; trivially true when exact.
    pub fn bounds_nested(&self, max: f64, denominator: u32) -> bool {
        match (&self.inner, &self.outer) {
            (Some(i), Some(o)) => rational_grid(max, denominator)
                .all(|a| !i.contains(a) || o.contains(a))
                && self.exclusions.iter().all(|&e| !i.contains(e)),
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("set serialization cannot fail")
    }
}

impl fmt::Display for HSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            return write!(f, "{}", self.shape());
        }
        let inner = self.inner.as_ref().map(|s| s.to_string()).unwrap_or_default();
        write!(f, "partial: {inner} ⊆ H ⊆ {}", self.shape())?;
        if !self.exclusions.is_empty() {
            let ex: Vec<String> = self.exclusions.iter().map(|x| fmt_real(*x)).collect();
            write!(f, ", excluding {{{}}}", ex.join(", "))?;
        }
        Ok(())
    }
}

/// `0, 1/d, 2/d, ..., ≤ max`.
pub fn rational_grid(max: f64, denominator: u32) -> impl Iterator<Item = f64> {
    let d = f64::from(denominator.max(1));
    let top = (max * d).floor().max(0.0) as u64;
    (0..=top).map(move |k| k as f64 / d)
}
