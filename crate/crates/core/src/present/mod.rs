//! Finitely presented quandles, homomorphisms into finite quandles, and
//! the 1-handle invariants obtained by pushing a designated pair of words
//! through such a homomorphism into `X ⊗ X`.
//!
//! Exponents follow the right-action convention: `x^(g)` is `x . g`, and a
//! letter `a^-1` inside `g` acts by `~`.

mod parse;

use std::fmt;

pub use parse::parse_presentation;

use crate::error::{Error, Result};
use crate::involution::{validate_good_involution, GoodInvolution};
use crate::quandle::{Element, Quandle, Sign};
use crate::tensor::{quotient, rho_map, tau_map, tensor_product, ClassId, Pair, TensorProduct};

/// Default cap on the number of assignments [`enumerate_homs`] will try.
pub const DEFAULT_SEARCH_CAP: u128 = 10_000_000;

/// A free-group word in syllable form: no zero exponents and no two
/// adjacent syllables on the same generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GWord(Vec<(usize, i64)>);

impl GWord {
    /// Freely reduces a syllable sequence.
    pub fn from_syllables(syllables: impl IntoIterator<Item = (usize, i64)>) -> GWord {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in syllables {
            match out.last_mut() {
                Some(last) if last.0 == g => {
                    last.1 += e;
                    if last.1 == 0 {
                        out.pop();
                    }
                }
                _ if e != 0 => out.push((g, e)),
                _ => {}
            }
        }
        GWord(out)
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One `(generator, sign)` letter per unit of exponent.
    pub fn letters(&self) -> Vec<(usize, Sign)> {
        self.0
            .iter()
            .flat_map(|&(g, e)| {
                let sign = if e > 0 { Sign::Plus } else { Sign::Minus };
                std::iter::repeat_n((g, sign), e.unsigned_abs() as usize)
            })
            .collect()
    }
}

/// Expression over the generators of a presentation (by index).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WordExpr {
    Gen(usize),
    /// `left * right`
    Op(Box<WordExpr>, Box<WordExpr>),
    /// `left ~ right`
    InvOp(Box<WordExpr>, Box<WordExpr>),
    /// `base . word` under the right action.
    Exp(Box<WordExpr>, GWord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<(WordExpr, WordExpr)>,
}

impl Presentation {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[(WordExpr, WordExpr)] {
        &self.relations
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a standalone expression over this presentation's generators.
    pub fn parse_expr(&self, text: &str) -> Result<WordExpr> {
        parse::parse_expr(&self.generators, text, 1)
    }

    pub fn display_expr(&self, e: &WordExpr) -> String {
        let mut out = String::new();
        parse::write_expr(&mut out, &self.generators, e);
        out
    }

    /// Parses `a=0,b=1` into an assignment; every generator must be bound.
    pub fn parse_assignment(&self, text: &str) -> Result<Assignment> {
        let mut images = vec![None; self.generators.len()];
        for binding in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = binding
                .split_once('=')
                .ok_or_else(|| Error::parse(1, format!("expected `name=element`, found `{binding}`")))?;
            let g = self
                .generator(name.trim())
                .ok_or_else(|| Error::parse(1, format!("unknown generator `{}`", name.trim())))?;
            let v: Element = value
                .trim()
                .parse()
                .map_err(|_| Error::parse(1, format!("invalid element `{}`", value.trim())))?;
            if images[g].replace(v).is_some() {
                return Err(Error::parse(1, format!("generator `{}` bound twice", name.trim())));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(g, v)| {
                v.ok_or_else(|| Error::parse(1, format!("generator `{}` is not assigned", self.generators[g])))
            })
            .collect::<Result<_>>()?;
        Ok(Assignment { images })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.generators.join(" "))?;
        for (l, r) in &self.relations {
            writeln!(f, "rel {} = {}", self.display_expr(l), self.display_expr(r))?;
        }
        Ok(())
    }
}

/// Images of the generators, in generator order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    pub images: Vec<Element>,
}

impl Assignment {
    pub fn new(images: Vec<Element>) -> Self {
        Assignment { images }
    }

    fn check(&self, p: &Presentation, q: &Quandle) -> Result<()> {
        if self.images.len() != p.generators.len() {
            return Err(Error::SizeMismatch {
                expected: p.generators.len(),
                got: self.images.len(),
            });
        }
        self.images.iter().try_for_each(|&v| q.check(v).map(drop))
    }
}

/// Evaluates `w` in `q` with generators sent to `asg`.
pub fn eval_word(q: &Quandle, asg: &Assignment, w: &WordExpr) -> Result<Element> {
    Ok(match w {
        WordExpr::Gen(g) => {
            let v = *asg.images.get(*g).ok_or(Error::SizeMismatch {
                expected: g + 1,
                got: asg.images.len(),
            })?;
            q.check(v)?
        }
        WordExpr::Op(l, r) => q.star(eval_word(q, asg, l)?, eval_word(q, asg, r)?),
        WordExpr::InvOp(l, r) => q.bar(eval_word(q, asg, l)?, eval_word(q, asg, r)?),
        WordExpr::Exp(base, word) => {
            let x = eval_word(q, asg, base)?;
            let letters: Vec<(Element, Sign)> = word
                .letters()
                .into_iter()
                .map(|(g, s)| {
                    asg.images.get(g).map(|&v| (v, s)).ok_or(Error::SizeMismatch {
                        expected: g + 1,
                        got: asg.images.len(),
                    })
                })
                .collect::<Result<_>>()?;
            q.act_word(x, &letters)?
        }
    })
}

/// Index of the first relation `asg` violates, if any.
pub fn failing_relation(p: &Presentation, q: &Quandle, asg: &Assignment) -> Result<Option<usize>> {
    asg.check(p, q)?;
    for (i, (l, r)) in p.relations.iter().enumerate() {
        if eval_word(q, asg, l)? != eval_word(q, asg, r)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Every assignment of generators to elements of `q` that satisfies all
/// relations, in lexicographic order of image tuples.
pub fn enumerate_homs(p: &Presentation, q: &Quandle, cap: u128) -> Result<Vec<Assignment>> {
    let g = p.generators.len();
    let n = q.len();
    let size = (n as u128).checked_pow(g as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SearchSpace { size, cap });
    }
    let mut found = Vec::new();
    let mut images = vec![0; g];
    loop {
        let asg = Assignment::new(images.clone());
        if failing_relation(p, q, &asg)?.is_none() {
            found.push(asg);
        }
        // odometer, last generator fastest
        let mut pos = g;
        loop {
            if pos == 0 {
                return Ok(found);
            }
            pos -= 1;
            images[pos] += 1;
            if images[pos] < n {
                break;
            }
            images[pos] = 0;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantMode {
    Strong,
    Weak,
}

/// Value of a 1-handle invariant: the class of the evaluated pair, and in
/// weak mode its block in the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleInvariant {
    pub pair: Pair,
    pub class: ClassId,
    pub class_label: String,
    /// Block index and its member classes (weak mode only).
    pub block: Option<(usize, Vec<ClassId>)>,
    /// Human-readable value: a class label, or a brace list of labels.
    pub label: String,
}

/// Pushes the designated pair `(w1, w2)` through `asg` into `q ⊗ q`
/// (strong) or into `q ⊗ q / <tau>` or `/ <tau, rho>` (weak).
#[allow(clippy::too_many_arguments)]
pub fn handle_invariant(
    p: &Presentation,
    asg: &Assignment,
    q: &Quandle,
    w1: &WordExpr,
    w2: &WordExpr,
    mode: InvariantMode,
    rho: Option<&GoodInvolution>,
) -> Result<HandleInvariant> {
    let t = tensor_product(q);
    handle_invariant_in(&t, p, asg, w1, w2, mode, rho)
}

/// As [`handle_invariant`], reusing a tensor product already built for `q`.
pub fn handle_invariant_in(
    t: &TensorProduct,
    p: &Presentation,
    asg: &Assignment,
    w1: &WordExpr,
    w2: &WordExpr,
    mode: InvariantMode,
    rho: Option<&GoodInvolution>,
) -> Result<HandleInvariant> {
    let q = t.quandle();
    if let Some(index) = failing_relation(p, q, asg)? {
        return Err(Error::RelationFails { index });
    }
    let rho = rho.map(|r| validate_good_involution(q, r.map())).transpose()?;
    let pair = (eval_word(q, asg, w1)?, eval_word(q, asg, w2)?);
    let class = t.class_id(pair.0, pair.1);
    let labels = t.labels();
    let class_label = labels[class].clone();
    let (block, label) = match mode {
        InvariantMode::Strong => (None, class_label.clone()),
        InvariantMode::Weak => {
            let tau = tau_map(t);
            let quot = match &rho {
                Some(rho) => quotient(t, &[&tau, &rho_map(t, rho)?]),
                None => quotient(t, &[&tau]),
            };
            let b = quot.block_of(class);
            let members = quot.blocks()[b].clone();
            let names: Vec<&str> = members.iter().map(|&c| labels[c].as_str()).collect();
            (Some((b, members)), format!("{{{}}}", names.join(", ")))
        }
    };
    Ok(HandleInvariant {
        pair,
        class,
        class_label,
        block,
        label,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::make_dihedral;

    const TWIST_SPUN_M2: &str = "gens a b / rel b = a^((b a)^2) / rel b^(a^2) = b";

    #[test]
    fn parses_twist_spun_presentation() {
        let p = parse_presentation(TWIST_SPUN_M2).unwrap();
        assert_eq!(p.generators(), &["a", "b"]);
        assert_eq!(p.relations().len(), 2);
        let (_, rhs) = &p.relations()[0];
        assert_eq!(
            p.relations()[0].1,
            WordExpr::Exp(Box::new(WordExpr::Gen(0)), GWord(vec![(1, 1), (0, 1), (1, 1), (0, 1)]))
        );
        assert!(matches!(rhs, WordExpr::Exp(..)));
        assert_eq!(
            p.relations()[1].0,
            WordExpr::Exp(Box::new(WordExpr::Gen(1)), GWord(vec![(0, 2)]))
        );
    }

    #[test]
    fn free_presentation() {
        let p = parse_presentation("gens x / ").unwrap();
        assert_eq!(p.generators(), &["x"]);
        assert!(p.relations().is_empty());
    }

    #[test]
    fn parse_errors() {
        let cases = [
            ("gens a / rel a = a^(b)", "unknown generator `b`"),
            ("gens a / rel a = (a * a", "expected `)`"),
            ("gens a / rel a = a^(a^0)", "zero exponent"),
            ("gens a / rel = a", "empty relation side"),
            ("gens a / rel a = ", "empty relation side"),
            ("gens a / rel a = a^(a a^-1)", "identity"),
            ("rel a = a", "before `gens`"),
            ("gens a a", "listed twice"),
            ("gens a / foo", "expected `gens` or `rel`"),
            ("gens a / rel a = a a", "unexpected `a`"),
            ("gens a / rel a = a^a", "expected `(`"),
            ("", "missing `gens`"),
        ];
        for (text, needle) in cases {
            let err = parse_presentation(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn line_numbers_in_errors() {
        let err = parse_presentation("# header\ngens a b\n\nrel a = c\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    }

    #[test]
    fn negative_word_exponents_invert() {
        let p = parse_presentation("gens a b x").unwrap();
        let e = p.parse_expr("x^((a b)^-2)").unwrap();
        assert_eq!(
            e,
            WordExpr::Exp(
                Box::new(WordExpr::Gen(2)),
                GWord(vec![(1, -1), (0, -1), (1, -1), (0, -1)])
            )
        );
        let e = p.parse_expr("x^(a^2 a^-1 b b^-1)").unwrap();
        assert_eq!(e, WordExpr::Exp(Box::new(WordExpr::Gen(2)), GWord(vec![(0, 1)])));
    }

    #[test]
    fn evaluation_in_r3() {
        let r3 = make_dihedral(3).unwrap();
        let p = parse_presentation("gens a b").unwrap();
        let asg = Assignment::new(vec![0, 1]);
        let e = p.parse_expr("a^(b a)").unwrap();
        assert_eq!(eval_word(&r3, &asg, &e).unwrap(), 1);
        assert_eq!(r3.act_word(0, &[(1, Sign::Plus), (0, Sign::Plus)]).unwrap(), 1);

        let q = make_dihedral(7).unwrap();
        let p = parse_presentation("gens x a").unwrap();
        for x in 0..7 {
            for a in 0..7 {
                let asg = Assignment::new(vec![x, a]);
                let lhs = eval_word(&q, &asg, &p.parse_expr("x^(a^-1)").unwrap()).unwrap();
                let rhs = eval_word(&q, &asg, &p.parse_expr("x ~ a").unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(eval_word(&r3, &asg, &WordExpr::Gen(1)).unwrap(), 1);
    }

    #[test]
    fn operators_are_left_associative() {
        let p = parse_presentation("gens a b c").unwrap();
        let e = p.parse_expr("a * b ~ c").unwrap();
        let expected = WordExpr::InvOp(
            Box::new(WordExpr::Op(Box::new(WordExpr::Gen(0)), Box::new(WordExpr::Gen(1)))),
            Box::new(WordExpr::Gen(2)),
        );
        assert_eq!(e, expected);
        // ^ binds tighter than *
        let e = p.parse_expr("a * b^(c)").unwrap();
        assert!(matches!(e, WordExpr::Op(_, ref r) if matches!(**r, WordExpr::Exp(..))));
    }

    #[test]
    fn homs_of_small_presentations() {
        let r5 = make_dihedral(5).unwrap();
        let free = parse_presentation("gens x").unwrap();
        assert_eq!(enumerate_homs(&free, &r5, DEFAULT_SEARCH_CAP).unwrap().len(), 5);
        let vacuous = parse_presentation("gens a / rel a = a").unwrap();
        assert_eq!(enumerate_homs(&vacuous, &r5, DEFAULT_SEARCH_CAP).unwrap().len(), 5);

        let p = parse_presentation("gens a b / rel b = a^((b a)^1) / rel b^(a^2) = b").unwrap();
        let homs = enumerate_homs(&p, &make_dihedral(3).unwrap(), DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(homs.len(), 9);
        assert!(homs.windows(2).all(|w| w[0] < w[1]));

        // a * b = a forces a = b in R_5 (2b - a = a  =>  2(b - a) = 0)
        let p = parse_presentation("gens a b / rel a * b = a").unwrap();
        let homs = enumerate_homs(&p, &r5, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(homs.len(), 5);
        assert!(homs.iter().all(|h| h.images[0] == h.images[1]));

        let big = parse_presentation("gens a b c d e f g h i j k").unwrap();
        assert!(matches!(
            enumerate_homs(&big, &r5, DEFAULT_SEARCH_CAP),
            Err(Error::SearchSpace { .. })
        ));
    }

    #[test]
    fn handle_invariant_examples() {
        let r3 = make_dihedral(3).unwrap();
        let p = parse_presentation("gens a b / rel b = a^((b a)^1) / rel b^(a^2) = b").unwrap();
        let asg = p.parse_assignment("a=0,b=1").unwrap();
        let a = p.parse_expr("a").unwrap();
        let b = p.parse_expr("b").unwrap();
        let strong = handle_invariant(&p, &asg, &r3, &a, &b, InvariantMode::Strong, None).unwrap();
        assert_eq!(strong.label, "E(1)");
        assert_eq!(strong.pair, (0, 1));
        let diag = handle_invariant(&p, &asg, &r3, &a, &a, InvariantMode::Strong, None).unwrap();
        assert_eq!(diag.label, "E(0)");
        let ab = handle_invariant(&p, &asg, &r3, &a, &b, InvariantMode::Weak, None).unwrap();
        let ba = handle_invariant(&p, &asg, &r3, &b, &a, InvariantMode::Weak, None).unwrap();
        assert_eq!(ab.block, ba.block);
    }

    #[test]
    fn handle_invariant_rejects_non_homs() {
        let r5 = make_dihedral(5).unwrap();
        let p = parse_presentation("gens a b / rel a * b = a").unwrap();
        let asg = Assignment::new(vec![0, 1]);
        let a = WordExpr::Gen(0);
        assert!(matches!(
            handle_invariant(&p, &asg, &r5, &a, &a, InvariantMode::Strong, None),
            Err(Error::RelationFails { index: 0 })
        ));
    }

    #[test]
    fn assignment_parsing() {
        let p = parse_presentation("gens a b").unwrap();
        assert_eq!(p.parse_assignment("b=2, a=1").unwrap().images, vec![1, 2]);
        assert!(p.parse_assignment("a=1").is_err());
        assert!(p.parse_assignment("a=1,b=2,c=0").is_err());
        assert!(p.parse_assignment("a=1,a=2,b=0").is_err());
        assert!(p.parse_assignment("a=x,b=0").is_err());
    }

    #[test]
    fn display_round_trips() {
        let p = parse_presentation(
            "gens a b c\nrel (a * b) ~ (c * a) = a^((b c^-1)^3 a)^(b)\nrel (a ~ b)^(c) = c * (a * b)",
        )
        .unwrap();
        let printed = p.to_string();
        assert_eq!(parse_presentation(&printed).unwrap(), p, "{printed}");
    }
}
