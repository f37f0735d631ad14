use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use super::{GenSymbol, NCPoly, Word};
use crate::error::{Error, Result};
use crate::pmatrix::Matrix;
use crate::scalars::RatFunc;

pub const DEFAULT_STEP_CAP: usize = 10_000;

/// Oriented relation `lhs → rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// Word measure: length, then inversions against the generator order, then
/// a lexicographic tie-break in which lower-ranked letters weigh more.
type Measure = (usize, usize, Vec<Reverse<usize>>);

#[derive(Debug, Clone)]
pub struct RewriteSystem {
    rules: Vec<RewriteRule>,
    order: Vec<GenSymbol>,
    step_cap: usize,
}

impl RewriteSystem {
    /// Validates distinct left-hand sides and strict measure decrease.
    pub fn new(order: Vec<GenSymbol>, rules: Vec<RewriteRule>) -> Result<Self> {
        let sys = RewriteSystem { rules: Vec::new(), order, step_cap: DEFAULT_STEP_CAP };
        for (i, r) in rules.iter().enumerate() {
            if rules[..i].iter().any(|o| o.lhs == r.lhs) {
                return Err(Error::NonDecreasingRule(format!("duplicate lhs {}", r.lhs)));
            }
            for g in r.lhs.letters().iter().copied().chain(r.rhs.generators()) {
                if sys.rank(g).is_none() {
                    return Err(Error::UnknownSymbol(g.to_string()));
                }
            }
            let top = sys.measure(&r.lhs);
            if r.rhs.terms().any(|(w, _)| sys.measure(w) >= top) {
                return Err(Error::NonDecreasingRule(r.to_string()));
            }
        }
        Ok(RewriteSystem { rules, ..sys })
    }

    /// Orients a set of relations (each `= 0`) by solving them for the given
    /// left-hand words. The coefficient block on `lhs_words` must be invertible.
    pub fn from_relations(order: Vec<GenSymbol>, relations: &[NCPoly], lhs_words: &[Word]) -> Result<Self> {
        if relations.len() != lhs_words.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} relations", lhs_words.len()),
                found: relations.len().to_string(),
            });
        }
        let n = lhs_words.len();
        let block = Matrix::from_fn(n, n, |i, j| relations[i].coefficient(&lhs_words[j]));
        let inv = block.inverse().map_err(|_| Error::NotInvertible)?;
        let rests: Vec<NCPoly> = relations
            .iter()
            .map(|rel| {
                let mut rest = rel.clone();
                for w in lhs_words {
                    rest = &rest - &NCPoly::term(w.clone(), rel.coefficient(w));
                }
                rest
            })
            .collect();
        let mut rules = Vec::with_capacity(n);
        for (j, lhs) in lhs_words.iter().enumerate() {
            let mut rhs = NCPoly::zero();
            for (i, rest) in rests.iter().enumerate() {
                rhs = &rhs - &rest.scale(inv.get(j, i));
            }
            rules.push(RewriteRule { lhs: lhs.clone(), rhs });
        }
        Self::new(order, rules)
    }

    pub fn with_step_cap(mut self, cap: usize) -> Self {
        self.step_cap = cap;
        self
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn order(&self) -> &[GenSymbol] {
        &self.order
    }

    pub fn step_cap(&self) -> usize {
        self.step_cap
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| &r.lhs == lhs)
    }

    /// Copy without the rule for `lhs`; used for negative controls.
    pub fn without_rule(&self, lhs: &Word) -> RewriteSystem {
        RewriteSystem {
            rules: self.rules.iter().filter(|r| &r.lhs != lhs).cloned().collect(),
            ..self.clone()
        }
    }

    /// Applies `f` to every rule coefficient, e.g. to specialize parameters.
    pub fn try_map_coeffs(&self, f: impl Fn(&RatFunc) -> Result<RatFunc>) -> Result<RewriteSystem> {
        let rules = self
            .rules
            .iter()
            .map(|r| Ok(RewriteRule { lhs: r.lhs.clone(), rhs: r.rhs.try_map_coeffs(&f)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(RewriteSystem { rules, ..self.clone() })
    }

    pub fn rank(&self, g: GenSymbol) -> Option<usize> {
        self.order.iter().position(|&o| o == g)
    }

    fn ranks(&self, w: &Word) -> Vec<usize> {
        w.letters().iter().map(|&g| self.rank(g).expect("generator outside alphabet")).collect()
    }

    fn measure(&self, w: &Word) -> Measure {
        let ranks = self.ranks(w);
        let mut inversions = 0;
        for i in 0..ranks.len() {
            for j in i + 1..ranks.len() {
                if ranks[i] > ranks[j] {
                    inversions += 1;
                }
            }
        }
        (w.len(), inversions, ranks.into_iter().map(Reverse).collect())
    }

    /// True when no rule applies anywhere in `w`.
    pub fn is_normal(&self, w: &Word) -> bool {
        self.matches(w).next().is_none()
    }

    /// All `(position, rule)` matches, leftmost first.
    fn matches<'a>(&'a self, w: &'a Word) -> impl Iterator<Item = (usize, &'a RewriteRule)> + 'a {
        (0..w.len()).flat_map(move |pos| {
            self.rules
                .iter()
                .filter(move |r| {
                    let n = r.lhs.len();
                    pos + n <= w.len() && w.letters()[pos..pos + n] == r.lhs.letters()[..]
                })
                .map(move |r| (pos, r))
        })
    }

    fn rewrite_at(&self, w: &Word, pos: usize, rule: &RewriteRule) -> NCPoly {
        let mut out = NCPoly::zero();
        for (mid, c) in rule.rhs.terms() {
            out.add_term(w.splice(pos, rule.lhs.len(), mid), c.clone());
        }
        out
    }
}

/// Leftmost-first normal form. Words are processed largest measure first with
/// their collected coefficient, which by linearity equals reducing each word
/// separately.
pub fn normal_order(p: &NCPoly, sys: &RewriteSystem) -> Result<NCPoly> {
    if let Some(g) = p.generators().find(|&g| sys.rank(g).is_none()) {
        return Err(Error::UnknownSymbol(g.to_string()));
    }
    let mut pending: BTreeMap<(Measure, Word), RatFunc> = BTreeMap::new();
    let push = |pending: &mut BTreeMap<(Measure, Word), RatFunc>, w: Word, c: RatFunc| {
        let key = (sys.measure(&w), w);
        match pending.get_mut(&key) {
            Some(x) => *x = &*x + &c,
            None => {
                pending.insert(key, c);
            }
        }
    };
    for (w, c) in p.terms() {
        push(&mut pending, w.clone(), c.clone());
    }
    let mut out = NCPoly::zero();
    let mut steps = 0usize;
    while let Some(((_, w), c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let Some((pos, rule)) = sys.matches(&w).next() else {
            out.add_term(w, c);
            continue;
        };
        steps += 1;
        if steps > sys.step_cap {
            return Err(Error::StepCapExceeded(sys.step_cap));
        }
        for (mid, rc) in rule.rhs.terms() {
            push(&mut pending, w.splice(pos, rule.lhs.len(), mid), &c * rc);
        }
    }
    Ok(out)
}

fn words_of_degree(alphabet: &[GenSymbol], deg: usize) -> Vec<Word> {
    let mut words = vec![Word::unit()];
    for _ in 0..deg {
        words = words
            .iter()
            .flat_map(|w| alphabet.iter().map(move |&g| w.concat(&Word(vec![g]))))
            .collect();
    }
    words
}

/// Every word up to `max_degree` whose normal form depends on which rule is
/// applied first.
pub fn diamond_check(sys: &RewriteSystem, max_degree: usize) -> Result<Vec<Word>> {
    let mut violations = Vec::new();
    for deg in 1..=max_degree {
        for w in words_of_degree(sys.order(), deg) {
            let firsts: Vec<NCPoly> = sys.matches(&w).map(|(pos, r)| sys.rewrite_at(&w, pos, r)).collect();
            if firsts.len() < 2 {
                continue;
            }
            let reference = normal_order(&firsts[0], sys)?;
            for alt in &firsts[1..] {
                if normal_order(alt, sys)? != reference {
                    violations.push(w.clone());
                    break;
                }
            }
        }
    }
    Ok(violations)
}
