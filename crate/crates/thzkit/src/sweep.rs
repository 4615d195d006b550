//! 1-D parameter sweep description shared by the CLI subcommands.
//!
//! Grammar: `start:stop:step[unit]` or `start:stop/count[log][unit]`. A
//! unit suffix on any field applies to every bare field; a bare sweep is
//! taken in the SI unit implied by the owning flag.

use crate::error::{Error, Result};
use crate::quantities::{parse_quantity, Dimension, Unit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum SweepKind {
    Step(f64),
    Count(usize),
}

/// Inclusive sweep in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub start: f64,
    pub stop: f64,
    kind: SweepKind,
    pub scale: SweepScale,
}

impl SweepSpec {
    pub fn with_step(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start < stop) {
            return Err(Error::domain(format!(
                "sweep needs start < stop (got {start}..{stop})"
            )));
        }
        if !(step > 0.0) {
            return Err(Error::domain(format!("sweep step must be > 0, got {step}")));
        }
        Ok(SweepSpec {
            start,
            stop,
            kind: SweepKind::Step(step),
            scale: SweepScale::Linear,
        })
    }

    pub fn with_count(start: f64, stop: f64, count: usize, scale: SweepScale) -> Result<Self> {
        if !(start < stop) {
            return Err(Error::domain(format!(
                "sweep needs start < stop (got {start}..{stop})"
            )));
        }
        if count < 2 {
            return Err(Error::domain(format!(
                "sweep count must be >= 2, got {count}"
            )));
        }
        if scale == SweepScale::Log && start <= 0.0 {
            return Err(Error::domain("log sweep needs start > 0".to_string()));
        }
        Ok(SweepSpec {
            start,
            stop,
            kind: SweepKind::Count(count),
            scale,
        })
    }

    /// Sample count. Step sweeps include every multiple of `step` from
    /// `start` up to `stop`; count sweeps include both endpoints.
    pub fn len(&self) -> usize {
        match self.kind {
            SweepKind::Count(n) => n,
            SweepKind::Step(step) => ((self.stop - self.start) / step + 1e-6).floor() as usize + 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one sample
    }

    pub fn samples(&self) -> Vec<f64> {
        let n = self.len();
        match (self.kind, self.scale) {
            (SweepKind::Step(step), _) => (0..n).map(|i| self.start + i as f64 * step).collect(),
            (SweepKind::Count(_), SweepScale::Linear) => {
                let d = (self.stop - self.start) / (n - 1) as f64;
                (0..n).map(|i| self.start + i as f64 * d).collect()
            }
            (SweepKind::Count(_), SweepScale::Log) => {
                let ratio = (self.stop / self.start).powf(1.0 / (n - 1) as f64);
                (0..n).map(|i| self.start * ratio.powi(i as i32)).collect()
            }
        }
    }

    /// Parse the CLI grammar; any unit suffix must belong to `dimension`.
    /// Returns a sweep in SI units.
    pub fn parse(text: &str, dimension: Dimension) -> Result<SweepSpec> {
        let bad = || {
            Error::domain(format!(
                "bad sweep {text:?}: expected start:stop:step[unit] or start:stop/count[log][unit]"
            ))
        };
        let fields: Vec<&str> = text.split(':').collect();
        match fields.as_slice() {
            [start, stop, step] => {
                let mut ctx = UnitContext::new(dimension);
                let start = ctx.field(start)?;
                let stop = ctx.field(stop)?;
                let step = ctx.field(step)?;
                SweepSpec::with_step(ctx.si(start), ctx.si(stop), ctx.si(step))
            }
            [start, tail] => {
                let (stop, count) = tail.split_once('/').ok_or_else(bad)?;
                // optional unit, then optional "log", on the count token
                let (count, unit_from_count) = split_unit_suffix(count.trim());
                let (count, scale) = match count.strip_suffix("log") {
                    Some(c) => (c, SweepScale::Log),
                    None => (count, SweepScale::Linear),
                };
                let count: usize = count.trim().parse().map_err(|_| bad())?;
                let mut ctx = UnitContext::new(dimension);
                if let Some(u) = unit_from_count {
                    ctx.observe(u)?;
                }
                let start = ctx.field(start)?;
                let stop = ctx.field(stop)?;
                SweepSpec::with_count(ctx.si(start), ctx.si(stop), count, scale)
            }
            _ => Err(bad()),
        }
    }
}

/// A value plus whether its field carried its own unit (already SI).
#[derive(Clone, Copy)]
struct Field {
    value: f64,
    in_si: bool,
}

/// Tracks the single unit shared by the fields of one sweep expression.
struct UnitContext {
    dimension: Dimension,
    unit: Option<Unit>,
}

impl UnitContext {
    fn new(dimension: Dimension) -> Self {
        UnitContext {
            dimension,
            unit: None,
        }
    }

    fn observe(&mut self, unit: Unit) -> Result<()> {
        if unit.dimension() != self.dimension {
            return Err(Error::domain(format!(
                "unit {} has the wrong dimension for this sweep",
                unit.symbol()
            )));
        }
        match self.unit {
            Some(u) if u != unit => Err(Error::domain(format!(
                "mixed units {} and {} in one sweep",
                u.symbol(),
                unit.symbol()
            ))),
            _ => {
                self.unit = Some(unit);
                Ok(())
            }
        }
    }

    fn field(&mut self, text: &str) -> Result<Field> {
        let t = text.trim();
        if let Ok(v) = t.parse::<f64>() {
            return Ok(Field {
                value: v,
                in_si: false,
            });
        }
        let q = parse_quantity(t)?;
        self.observe(q.unit)?;
        Ok(Field {
            value: q.to_si(),
            in_si: true,
        })
    }

    fn si(&self, f: Field) -> f64 {
        if f.in_si {
            f.value
        } else {
            f.value * self.unit.map(|u| u.si_factor()).unwrap_or(1.0)
        }
    }
}

/// Split a trailing unit spelling off a token, if present.
fn split_unit_suffix(text: &str) -> (&str, Option<Unit>) {
    for (sym, unit) in Unit::spellings() {
        if let Some(rest) = text.strip_suffix(sym) {
            if !rest.is_empty()
                && rest
                    .chars()
                    .last()
                    .is_some_and(|c| c.is_ascii_digit() || c == 'g')
            {
                return (rest, Some(*unit));
            }
        }
    }
    (text, None)
}
