use crate::error::{Error, Result};
use crate::involution::{symmetric_double, GoodInvolution};
use crate::quandle::{Element, Quandle};

/// A validated quandle homomorphism `f: source -> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleHom {
    source: Quandle,
    target: Quandle,
    map: Vec<Element>,
}

/// Checks `f(x*y) = f(x)*f(y)` for all pairs; the first failing pair in
/// lexicographic order is returned as the witness.
pub fn validate_hom(map: &[Element], source: &Quandle, target: &Quandle) -> Result<QuandleHom> {
    if map.len() != source.len() {
        return Err(Error::SizeMismatch {
            expected: source.len(),
            got: map.len(),
        });
    }
    if let Some(&value) = map.iter().find(|&&v| v >= target.len()) {
        return Err(Error::OutOfRange { value, n: target.len() });
    }
    for x in 0..source.len() {
        for y in 0..source.len() {
            if map[source.star(x, y)] != target.star(map[x], map[y]) {
                return Err(Error::NotHom { x, y });
            }
        }
    }
    Ok(QuandleHom {
        source: source.clone(),
        target: target.clone(),
        map: map.to_vec(),
    })
}

impl QuandleHom {
    pub fn source(&self) -> &Quandle {
        &self.source
    }

    pub fn target(&self) -> &Quandle {
        &self.target
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    /// True when `f . rho_source = rho_target . f`.
    pub fn commutes_with(&self, rho_source: &GoodInvolution, rho_target: &GoodInvolution) -> bool {
        rho_source.len() == self.source.len()
            && rho_target.len() == self.target.len()
            && (0..self.source.len()).all(|x| self.map[rho_source.apply(x)] == rho_target.apply(self.map[x]))
    }
}

/// The induced map `D(X) -> D(Y)`, `x^e -> f(x)^e`.
pub fn double_hom(f: &QuandleHom) -> QuandleHom {
    let (nx, ny) = (f.source.len(), f.target.len());
    let (dx, _) = symmetric_double(&f.source);
    let (dy, _) = symmetric_double(&f.target);
    let map = (0..2 * nx)
        .map(|a| if a < nx { f.map[a] } else { ny + f.map[a - nx] })
        .collect();
    QuandleHom {
        source: dx,
        target: dy,
        map,
    }
}
