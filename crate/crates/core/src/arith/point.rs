use std::collections::BTreeMap;
use std::fmt;

use super::Rational;

/// A closed point of the parameter line `P¹` over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointP1 {
    Finite(Rational),
    Infinity,
}

impl PointP1 {
    pub fn is_finite(&self) -> bool {
        matches!(self, PointP1::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            PointP1::Finite(q) => Some(q),
            PointP1::Infinity => None,
        }
    }

    pub fn is_value(&self, q: &Rational) -> bool {
        matches!(self, PointP1::Finite(v) if v == q)
    }
}

impl From<Rational> for PointP1 {
    fn from(q: Rational) -> Self {
        PointP1::Finite(q)
    }
}

impl fmt::Display for PointP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointP1::Finite(q) => write!(f, "{q}"),
            PointP1::Infinity => f.write_str("inf"),
        }
    }
}

/// A Weil divisor on `P¹` with ℚ-rational support: point ↦ nonzero order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Divisor {
    orders: BTreeMap<PointP1, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `n` to the order at `p`, removing the point if it reaches zero.
    pub fn add_point(&mut self, p: PointP1, n: i64) {
        if n == 0 {
            return;
        }
        let entry = self.orders.entry(p.clone()).or_insert(0);
        *entry += n;
        if *entry == 0 {
            self.orders.remove(&p);
        }
    }

    pub fn order(&self, p: &PointP1) -> i64 {
        self.orders.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PointP1, i64)> {
        self.orders.iter().map(|(p, n)| (p, *n))
    }

    pub fn support(&self) -> impl Iterator<Item = &PointP1> {
        self.orders.keys()
    }

    pub fn degree(&self) -> i64 {
        self.orders.values().sum()
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Pointwise maximum; the supremum of two divisors.
    pub fn sup(&self, other: &Divisor) -> Divisor {
        let mut out = Divisor::new();
        for p in self.orders.keys().chain(other.orders.keys()) {
            if out.orders.contains_key(p) {
                continue;
            }
            out.add_point(p.clone(), self.order(p).max(other.order(p)));
        }
        out
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (p, n) in &self.orders {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{n}[{p}]")?;
        }
        Ok(())
    }
}
