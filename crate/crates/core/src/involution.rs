//! Good involutions and symmetric doubles.

use crate::error::{Error, InvolutionViolation, Result};
use crate::quandle::{Element, Family, Quandle, Sign};

/// Default size limit for [`enumerate_good_involutions`].
pub const DEFAULT_INVOLUTION_BOUND: usize = 10;

/// An involution satisfying S1 and S2 for some quandle. Only obtainable
/// through validation or construction of a symmetric double.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoodInvolution {
    map: Vec<Element>,
}

impl GoodInvolution {
    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// Checks involutivity, S1 (`rho(x*y) = rho(x)*y`) and S2
/// (`x*rho(y) = x~y`), collecting every witness.
pub fn validate_good_involution(q: &Quandle, rho: &[Element]) -> Result<GoodInvolution> {
    let n = q.len();
    if rho.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: rho.len(),
        });
    }
    if let Some(&value) = rho.iter().find(|&&v| v >= n) {
        return Err(Error::OutOfRange { value, n });
    }
    let violations = involution_violations(q, rho, false);
    if violations.is_empty() {
        Ok(GoodInvolution { map: rho.to_vec() })
    } else {
        Err(Error::Involution(violations))
    }
}

fn involution_violations(q: &Quandle, rho: &[Element], fail_fast: bool) -> Vec<InvolutionViolation> {
    let n = q.len();
    let mut out = Vec::new();
    for x in 0..n {
        if rho[rho[x]] != x {
            out.push(InvolutionViolation::NotInvolution { x });
            if fail_fast {
                return out;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if rho[q.star(x, y)] != q.star(rho[x], y) {
                out.push(InvolutionViolation::S1 { x, y });
                if fail_fast {
                    return out;
                }
            }
            if q.star(x, rho[y]) != q.bar(x, y) {
                out.push(InvolutionViolation::S2 { x, y });
                if fail_fast {
                    return out;
                }
            }
        }
    }
    out.sort();
    out
}

/// Checks only S1, the condition under which `rho x rho` commutes with the
/// diagonal action on pairs.
pub(crate) fn satisfies_s1(q: &Quandle, rho: &[Element]) -> bool {
    (0..q.len()).all(|x| (0..q.len()).all(|y| rho[q.star(x, y)] == q.star(rho[x], y)))
}

/// All good involutions of `q`, by brute force over the involutions of the
/// carrier, in lexicographic order of the image array.
pub fn enumerate_good_involutions(q: &Quandle, bound: usize) -> Result<Vec<GoodInvolution>> {
    let n = q.len();
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut found = Vec::new();
    let mut map = vec![usize::MAX; n];
    pair_up(&mut map, 0, &mut |candidate| {
        if involution_violations(q, candidate, true).is_empty() {
            found.push(GoodInvolution {
                map: candidate.to_vec(),
            });
        }
    });
    found.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(found)
}

/// Visits every involution of `{0..map.len()}` by pairing the first free
/// point either with itself or with a later free point.
fn pair_up(map: &mut [usize], from: usize, visit: &mut dyn FnMut(&[usize])) {
    let Some(i) = (from..map.len()).find(|&i| map[i] == usize::MAX) else {
        visit(map);
        return;
    };
    map[i] = i;
    pair_up(map, i + 1, visit);
    for j in i + 1..map.len() {
        if map[j] == usize::MAX {
            map[i] = j;
            map[j] = i;
            pair_up(map, i + 1, visit);
            map[j] = usize::MAX;
        }
    }
    map[i] = usize::MAX;
}

/// An element `x^+` or `x^-` of a symmetric double, encoded as `x` or `n + x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubledElement {
    pub base: Element,
    pub sign: Sign,
}

impl DoubledElement {
    pub fn new(base: Element, sign: Sign) -> Self {
        DoubledElement { base, sign }
    }

    pub fn encode(self, n: usize) -> Element {
        match self.sign {
            Sign::Plus => self.base,
            Sign::Minus => n + self.base,
        }
    }

    pub fn decode(code: Element, n: usize) -> Result<Self> {
        if code >= 2 * n {
            return Err(Error::OutOfRange { value: code, n: 2 * n });
        }
        Ok(if code < n {
            DoubledElement::new(code, Sign::Plus)
        } else {
            DoubledElement::new(code - n, Sign::Minus)
        })
    }
}

/// The symmetric double `D(X) = X+ ⊔ X-` with its copy-swapping involution.
///
/// `x^s * y^+ = (x*y)^s`, `x^s * y^- = (x~y)^s`; the inverse table follows.
pub fn symmetric_double(q: &Quandle) -> (Quandle, GoodInvolution) {
    let n = q.len();
    let mut op = Vec::with_capacity(4 * n * n);
    for a in 0..2 * n {
        let (x, sx) = (a % n, a >= n);
        for b in 0..2 * n {
            let (y, sy) = (b % n, b >= n);
            let base = if sy { q.bar(x, y) } else { q.star(x, y) };
            op.push(if sx { n + base } else { base });
        }
    }
    let family = match q.family() {
        Some(Family::Dihedral(m)) => Some(Family::DihedralDouble(m)),
        _ => None,
    };
    let double = Quandle::from_trusted(2 * n, op, family);
    let map = (0..2 * n).map(|a| (a + n) % (2 * n)).collect();
    (double, GoodInvolution { map })
}

/// The identity map, validated as a good involution. It passes exactly when
/// `*` and `~` coincide.
pub fn identity_involution(q: &Quandle) -> Result<GoodInvolution> {
    let id: Vec<Element> = (0..q.len()).collect();
    validate_good_involution(q, &id)
}
