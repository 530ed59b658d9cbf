use serde::{Deserialize, Serialize};

use super::{from_zero_based, ColoredDigraph, TailPartitionColoring};
use crate::digraph::{make_circulant, CirculantSpec, PairIndex};
use crate::error::{Error, Result};

/// `C_n([k])` with consecutive blocks of `k` vertices as color classes.
pub fn color_circulant_interval(n: usize, k: usize) -> Result<ColoredDigraph> {
    if k < 1 || k + 2 > n {
        return Err(Error::Hypothesis(format!(
            "interval circulant needs 1 <= k <= n - 2, got n = {n}, k = {k}"
        )));
    }
    let digraph = make_circulant(&CirculantSpec::interval(n, k)?);
    let partition = TailPartitionColoring::new((0..n).map(|i| i / k).collect());
    let coloring = partition.induce(&digraph);
    Ok(ColoredDigraph { digraph, coloring })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum C2kVariant {
    /// Generators `{1, k}`.
    OneK,
    /// Generators `{1, k + 1}`.
    OneKPlusOne,
}

impl C2kVariant {
    pub fn second_generator(self, k: usize) -> usize {
        match self {
            C2kVariant::OneK => k,
            C2kVariant::OneKPlusOne => k + 1,
        }
    }
}

/// `C_{2k}({1, k})` or `C_{2k}({1, k+1})` colored by `V_r = {v_r, v_{r+k}}`.
pub fn color_c2k(k: usize, variant: C2kVariant) -> Result<ColoredDigraph> {
    if k < 2 {
        return Err(Error::Hypothesis(format!(
            "C_2k family needs k >= 2, got {k}"
        )));
    }
    let n = 2 * k;
    let digraph = make_circulant(&CirculantSpec::new(n, [1, variant.second_generator(k)])?);
    let partition = TailPartitionColoring::new((0..n).map(|i| i % k).collect());
    let coloring = partition.induce(&digraph);
    Ok(ColoredDigraph { digraph, coloring })
}

/// `C_{(k-1)^2}({1, k})` with `2k - 4` colors.
///
/// Vertices are read as `<r, s>` in base `k - 1`. A k-jump takes the class
/// `r` of its tail. A 1-jump leaving `<r, 0>` or `<r, k-2>` takes color `r`;
/// one leaving `<r, s>` with `1 <= s <= k-3` takes `k - 2 + s`.
pub fn color_square(k: usize) -> Result<ColoredDigraph> {
    if k < 3 {
        return Err(Error::Hypothesis(format!(
            "square family needs k >= 3, got {k}"
        )));
    }
    let base = k - 1;
    let n = base * base;
    let digraph = make_circulant(&CirculantSpec::new(n, [1, k])?);
    let coloring = from_zero_based(&digraph, 2 * k - 4, |t, h| {
        let p = PairIndex::of(t, base);
        if h == (t + k) % n || p.s == 0 || p.s == k - 2 {
            p.r
        } else {
            k - 2 + p.s
        }
    });
    Ok(ColoredDigraph { digraph, coloring })
}

/// `C_{a k}({1, k})` with `a + k - 2` colors, for `a >= k - 1 >= 2`.
///
/// Vertices are read as `<r, s>` in base `k`; k-jumps `<r,s> -> <r+1,s>`
/// take color `r`, 1-jumps follow the row rules below.
pub fn color_multiple(k: usize, a: usize) -> Result<ColoredDigraph> {
    if k < 3 || a + 1 < k {
        return Err(Error::Hypothesis(format!(
            "multiple family needs a >= k - 1 >= 2, got k = {k}, a = {a}"
        )));
    }
    let n = a * k;
    let digraph = make_circulant(&CirculantSpec::new(n, [1, k])?);
    let coloring = from_zero_based(&digraph, a + k - 2, |t, h| {
        let PairIndex { r, s: j, .. } = PairIndex::of(t, k);
        if h == (t + k) % n {
            return r;
        }
        if r + 2 >= k {
            // r >= k - 2
            if j == 0 || j == k - 1 {
                r
            } else {
                a - 1 + j
            }
        } else if j == k - 1 {
            a + r
        } else if j + 2 + r == k {
            // the 1-jump <r, k-2-r> -> <r, k-1-r>
            r
        } else if j + 3 + r <= k {
            a + r + j
        } else {
            a + j + r + 1 - k
        }
    });
    Ok(ColoredDigraph { digraph, coloring })
}

fn check_formula_domain(n: usize, k: usize) -> Result<()> {
    if k < 2 || k >= n {
        return Err(Error::Inapplicable(format!(
            "C_n({{1, k}}) needs 2 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    if n < (k - 1) * n.div_ceil(k) {
        return Err(Error::Inapplicable(format!(
            "n = {n} < (k - 1) * ceil(n / k) = {}",
            (k - 1) * n.div_ceil(k)
        )));
    }
    Ok(())
}

/// `d(v_0, v_i) = floor(i / k) + (i mod k)` in `C_n({1, k})`.
pub fn circulant_distance_formula(n: usize, k: usize, i: usize) -> Result<usize> {
    check_formula_domain(n, k)?;
    if i >= n {
        return Err(Error::VertexOutOfRange { vertex: i, n });
    }
    Ok(i / k + i % k)
}

/// `diam C_n({1, k}) = floor((n-1) / k) + max(re(n-1, k), k - 2)`.
pub fn circulant_diameter_formula(n: usize, k: usize) -> Result<usize> {
    check_formula_domain(n, k)?;
    Ok((n - 1) / k + ((n - 1) % k).max(k - 2))
}
