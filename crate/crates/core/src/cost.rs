//! Cost functions for the GLWS recurrence `D[i] = min_{j<i} E[j] + w(j, i)`.
//!
//! A [`CostModel`] bundles the interval cost `w`, the `E[j] = f(D[j], j)`
//! hook, and the declared Monge shape. The algorithms trust the declared
//! shape; [`monge_check`] and [`monge_check_exhaustive`] exist to validate a
//! model before it is used.
//!
//! Only the Monge condition is checked here. The algorithms themselves only
//! rely on total monotonicity of `E[j] + w(j, i)`, so a model that is totally
//! monotone without being Monge will still be solved correctly, but it cannot
//! be validated with these checkers.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{DpError, Result};
use crate::types::{add, Cost};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `w(a,c) + w(b,d) <= w(b,c) + w(a,d)`; best decisions are non-decreasing.
    Convex,
    /// `w(a,c) + w(b,d) >= w(b,c) + w(a,d)`.
    Concave,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Convex => f.write_str("convex"),
            Shape::Concave => f.write_str("concave"),
        }
    }
}

/// Evaluator bundle for one GLWS instance over states `0..=len()`.
///
/// Implementations must be pure: the parallel algorithms evaluate `weight`
/// repeatedly and from many threads, and expect identical answers.
pub trait CostModel: Sync {
    fn shape(&self) -> Shape;

    /// Largest state `n`.
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `w(j, i)` for `0 <= j < i <= n`. Callers guarantee the domain.
    fn weight(&self, j: usize, i: usize) -> Cost;

    /// `E[j] = f(D[j], j)`. Defaults to plain LWS, `E[j] = D[j]`.
    fn transform(&self, d: Cost, _j: usize) -> Cost {
        d
    }

    /// Domain-checked `w(j, i)`.
    fn try_weight(&self, j: usize, i: usize) -> Result<Cost> {
        if j >= i || i > self.len() {
            return Err(DpError::invalid(format!(
                "cost w({j}, {i}) is outside 0 <= j < i <= {}",
                self.len()
            )));
        }
        Ok(self.weight(j, i))
    }
}

impl<M: CostModel + ?Sized> CostModel for &M {
    fn shape(&self) -> Shape {
        (**self).shape()
    }
    fn len(&self) -> usize {
        (**self).len()
    }
    fn weight(&self, j: usize, i: usize) -> Cost {
        (**self).weight(j, i)
    }
    fn transform(&self, d: Cost, j: usize) -> Cost {
        (**self).transform(d, j)
    }
}

/// Cost model built from closures, mostly for tests and ad-hoc instances.
pub struct FnCost<W> {
    n: usize,
    shape: Shape,
    weight: W,
}

impl<W> FnCost<W>
where
    W: Fn(usize, usize) -> Cost + Sync,
{
    pub fn new(n: usize, shape: Shape, weight: W) -> Self {
        FnCost { n, shape, weight }
    }
}

impl<W> CostModel for FnCost<W>
where
    W: Fn(usize, usize) -> Cost + Sync,
{
    fn shape(&self) -> Shape {
        self.shape
    }
    fn len(&self) -> usize {
        self.n
    }
    fn weight(&self, j: usize, i: usize) -> Cost {
        (self.weight)(j, i)
    }
}

/// Wraps a model with `E[j] = D[j] + offsets[j]`.
///
/// Per-state offsets cancel in the quadrangle inequality, so the wrapped
/// transition function keeps the inner model's shape.
pub struct Shifted<M> {
    inner: M,
    offsets: Vec<Cost>,
}

impl<M: CostModel> Shifted<M> {
    pub fn new(inner: M, offsets: Vec<Cost>) -> Result<Self> {
        if offsets.len() != inner.len() + 1 {
            return Err(DpError::invalid(format!(
                "expected {} offsets, got {}",
                inner.len() + 1,
                offsets.len()
            )));
        }
        Ok(Shifted { inner, offsets })
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: CostModel> CostModel for Shifted<M> {
    fn shape(&self) -> Shape {
        self.inner.shape()
    }
    fn len(&self) -> usize {
        self.inner.len()
    }
    fn weight(&self, j: usize, i: usize) -> Cost {
        self.inner.weight(j, i)
    }
    fn transform(&self, d: Cost, j: usize) -> Cost {
        add(self.inner.transform(d, j), self.offsets[j])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PostOfficeVariant {
    /// `C + sum_{v=j+1..i} |x_v - x_med|` with the lower median.
    MedianDistance,
    /// `C + (i - j)^2`.
    SquaredLength,
    /// `C + g(i - j)` with `g` an exactly concave integer table scaled by `K`.
    SqrtLength { scale: u64 },
}

impl PostOfficeVariant {
    pub fn shape(&self) -> Shape {
        match self {
            PostOfficeVariant::MedianDistance | PostOfficeVariant::SquaredLength => Shape::Convex,
            PostOfficeVariant::SqrtLength { .. } => Shape::Concave,
        }
    }
}

pub const DEFAULT_SQRT_SCALE: u64 = 1 << 20;

/// Post-office clustering costs over villages at integer coordinates.
///
/// Village `v` (1-based) sits at `positions[v - 1]`; state `i` means "the
/// first `i` villages are served".
#[derive(Debug, Clone)]
pub struct PostOfficeCost {
    positions: Vec<i64>,
    prefix: Vec<i64>,
    fixed: Cost,
    variant: PostOfficeVariant,
    concave_table: Vec<Cost>,
}

/// Builds a post-office cost model. Positions must be strictly ascending.
pub fn make_post_office_cost(
    positions: Vec<i64>,
    fixed_cost: Cost,
    variant: PostOfficeVariant,
) -> Result<PostOfficeCost> {
    if let Some(w) = positions.windows(2).position(|w| w[0] >= w[1]) {
        return Err(DpError::invalid(format!(
            "positions must be strictly ascending (index {} = {}, index {} = {})",
            w,
            positions[w],
            w + 1,
            positions[w + 1]
        )));
    }
    let mut prefix = Vec::with_capacity(positions.len() + 1);
    prefix.push(0);
    let mut acc = 0i64;
    for &x in &positions {
        acc += x;
        prefix.push(acc);
    }
    let concave_table = match variant {
        PostOfficeVariant::SqrtLength { scale } => concave_sqrt_table(positions.len(), scale),
        _ => Vec::new(),
    };
    Ok(PostOfficeCost {
        positions,
        prefix,
        fixed: fixed_cost,
        variant,
        concave_table,
    })
}

/// `g(L) = sum_{t=1..L} floor(K (sqrt t - sqrt(t-1)))`, with increments
/// clamped to be non-increasing so the table is concave for every `K`.
pub fn concave_sqrt_table(n: usize, scale: u64) -> Vec<Cost> {
    let k = scale as f64;
    let mut table = Vec::with_capacity(n + 1);
    table.push(0);
    let mut prev_step = Cost::MAX;
    let mut acc: Cost = 0;
    for t in 1..=n {
        let tf = t as f64;
        let step = (k / (tf.sqrt() + (tf - 1.0).sqrt())).floor() as Cost;
        let step = step.min(prev_step);
        prev_step = step;
        acc += step;
        table.push(acc);
    }
    table
}

impl PostOfficeCost {
    pub fn positions(&self) -> &[i64] {
        &self.positions
    }

    pub fn fixed_cost(&self) -> Cost {
        self.fixed
    }

    pub fn variant(&self) -> PostOfficeVariant {
        self.variant
    }

    fn median_distance(&self, j: usize, i: usize) -> Cost {
        let med = j + (i - j).div_ceil(2);
        let xm = self.positions[med - 1];
        let left = xm * (med - j) as i64 - (self.prefix[med] - self.prefix[j]);
        let right = (self.prefix[i] - self.prefix[med]) - xm * (i - med) as i64;
        left + right
    }
}

impl CostModel for PostOfficeCost {
    fn shape(&self) -> Shape {
        self.variant.shape()
    }

    fn len(&self) -> usize {
        self.positions.len()
    }

    #[inline]
    fn weight(&self, j: usize, i: usize) -> Cost {
        debug_assert!(j < i && i <= self.positions.len());
        let body = match self.variant {
            PostOfficeVariant::MedianDistance => self.median_distance(j, i),
            PostOfficeVariant::SquaredLength => {
                let l = (i - j) as i64;
                l * l
            }
            PostOfficeVariant::SqrtLength { .. } => self.concave_table[i - j],
        };
        self.fixed + body
    }
}

/// Textual cost selection, e.g. `quad:C=10`, `median:C=5`,
/// `sqrt:C=0,K=1048576`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostSpec {
    pub variant: PostOfficeVariant,
    pub fixed: Cost,
}

impl CostSpec {
    pub fn build(&self, positions: Vec<i64>) -> Result<PostOfficeCost> {
        make_post_office_cost(positions, self.fixed, self.variant)
    }

    /// Builds a model over villages at `1..=n`.
    pub fn build_unit(&self, n: usize) -> Result<PostOfficeCost> {
        self.build((1..=n as i64).collect())
    }

    pub fn shape(&self) -> Shape {
        self.variant.shape()
    }
}

impl fmt::Display for CostSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            PostOfficeVariant::MedianDistance => write!(f, "median:C={}", self.fixed),
            PostOfficeVariant::SquaredLength => write!(f, "quad:C={}", self.fixed),
            PostOfficeVariant::SqrtLength { scale } => {
                write!(f, "sqrt:C={},K={}", self.fixed, scale)
            }
        }
    }
}

impl FromStr for CostSpec {
    type Err = DpError;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, p),
            None => (s, ""),
        };
        let mut fixed: Cost = 0;
        let mut scale: u64 = DEFAULT_SQRT_SCALE;
        for kv in params.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| {
                DpError::invalid(format!("cost parameter '{kv}' is not KEY=VALUE"))
            })?;
            match k {
                "C" => {
                    fixed = v
                        .parse()
                        .map_err(|_| DpError::invalid(format!("bad fixed cost '{v}'")))?
                }
                "K" => {
                    scale = v
                        .parse()
                        .map_err(|_| DpError::invalid(format!("bad scale '{v}'")))?
                }
                other => {
                    return Err(DpError::invalid(format!(
                        "unknown cost parameter '{other}'"
                    )))
                }
            }
        }
        let variant = match name {
            "quad" => PostOfficeVariant::SquaredLength,
            "median" => PostOfficeVariant::MedianDistance,
            "sqrt" => PostOfficeVariant::SqrtLength { scale },
            other => return Err(DpError::invalid(format!("unknown cost family '{other}'"))),
        };
        if name != "sqrt" && params.contains("K=") {
            return Err(DpError::invalid("K only applies to the sqrt family"));
        }
        Ok(CostSpec { variant, fixed })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MongeReport {
    Ok,
    /// A quadruple `a < b < c < d` violating the declared inequality.
    Counterexample(usize, usize, usize, usize),
}

impl MongeReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, MongeReport::Ok)
    }
}

fn quadruple_holds<M: CostModel + ?Sized>(m: &M, a: usize, b: usize, c: usize, d: usize) -> bool {
    let lhs = m.weight(a, c) as i128 + m.weight(b, d) as i128;
    let rhs = m.weight(b, c) as i128 + m.weight(a, d) as i128;
    match m.shape() {
        Shape::Convex => lhs <= rhs,
        Shape::Concave => lhs >= rhs,
    }
}

/// Samples `samples` quadruples `a < b < c < d` in `[0, n]` and checks the
/// declared Monge inequality. Models with `n < 4` pass vacuously.
pub fn monge_check<M: CostModel + ?Sized>(model: &M, samples: usize, seed: u64) -> MongeReport {
    let n = model.len();
    if n < 4 {
        return MongeReport::Ok;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mut q = [0usize; 4];
        loop {
            for x in q.iter_mut() {
                *x = rng.gen_range(0..=n);
            }
            q.sort_unstable();
            if q[0] < q[1] && q[1] < q[2] && q[2] < q[3] {
                break;
            }
        }
        let [a, b, c, d] = q;
        if !quadruple_holds(model, a, b, c, d) {
            return MongeReport::Counterexample(a, b, c, d);
        }
    }
    MongeReport::Ok
}

/// Checks every quadruple. Quartic in `n`; meant for `n <= 30` or so.
pub fn monge_check_exhaustive<M: CostModel + ?Sized>(model: &M) -> MongeReport {
    let n = model.len();
    for a in 0..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    if !quadruple_holds(model, a, b, c, d) {
                        return MongeReport::Counterexample(a, b, c, d);
                    }
                }
            }
        }
    }
    MongeReport::Ok
}
