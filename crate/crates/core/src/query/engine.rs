//! Index-backed backtracking join. At each step the pattern with the fewest
//! candidate triples under the current bindings is evaluated next.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::kg::{Iri, Term, Triple, TripleSet};

use super::pattern::{Pattern, PatternTerm, TriplePattern};

/// Solutions of a pattern, one row per distinct assignment, sorted by the
/// rendered binding tuple (variables in name order).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BindingSet {
    variables: Vec<String>,
    rows: Vec<Vec<Term>>,
}

impl BindingSet {
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Raw rows, terms in [`variables`](Self::variables) order.
    pub fn rows(&self) -> &[Vec<Term>] {
        &self.rows
    }

    pub fn solutions(&self) -> impl Iterator<Item = BTreeMap<&str, &Term>> + '_ {
        self.rows.iter().map(move |row| {
            self.variables
                .iter()
                .map(String::as_str)
                .zip(row.iter())
                .collect()
        })
    }

    fn column(&self, var: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == var)
    }

    /// Projects onto the given variables. Unknown variables panic.
    pub fn project(&self, vars: &[&str]) -> BTreeSet<Vec<Term>> {
        let cols: Vec<usize> = vars
            .iter()
            .map(|v| {
                self.column(v)
                    .unwrap_or_else(|| panic!("unknown variable ?{v}"))
            })
            .collect();
        self.rows
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect()
    }
}

struct Index<'a> {
    all: Vec<&'a Triple>,
    by_subject: HashMap<&'a Iri, Vec<&'a Triple>>,
    by_predicate: HashMap<&'a Iri, Vec<&'a Triple>>,
    by_object: HashMap<&'a Term, Vec<&'a Triple>>,
}

impl<'a> Index<'a> {
    fn new(ts: &'a TripleSet) -> Self {
        let mut idx = Index {
            all: Vec::with_capacity(ts.len()),
            by_subject: HashMap::new(),
            by_predicate: HashMap::new(),
            by_object: HashMap::new(),
        };
        for t in ts {
            idx.all.push(t);
            idx.by_subject.entry(&t.subject).or_default().push(t);
            idx.by_predicate.entry(&t.predicate).or_default().push(t);
            idx.by_object.entry(&t.object).or_default().push(t);
        }
        idx
    }

    /// Smallest candidate list for a pattern given the bindings so far.
    fn candidates(&self, tp: &TriplePattern, bindings: &HashMap<&str, Term>) -> &[&'a Triple] {
        let resolve = |p: &PatternTerm| -> Option<Term> {
            match p {
                PatternTerm::Const(t) => Some(t.clone()),
                PatternTerm::Var(v) => bindings.get(v.as_str()).cloned(),
            }
        };
        let mut lists: Vec<&[&'a Triple]> = vec![&self.all];
        match resolve(&tp.subject) {
            Some(Term::Iri(s)) => lists.push(self.by_subject.get(&s).map_or(&[], Vec::as_slice)),
            Some(Term::Literal(_)) => return &[],
            None => {}
        }
        match resolve(&tp.predicate) {
            Some(Term::Iri(p)) => lists.push(self.by_predicate.get(&p).map_or(&[], Vec::as_slice)),
            Some(Term::Literal(_)) => return &[],
            None => {}
        }
        if let Some(o) = resolve(&tp.object) {
            lists.push(self.by_object.get(&o).map_or(&[], Vec::as_slice));
        }
        lists
            .into_iter()
            .min_by_key(|l| l.len())
            .expect("at least the full list")
    }
}

fn unify<'v>(
    tp: &'v TriplePattern,
    t: &Triple,
    bindings: &mut HashMap<&'v str, Term>,
    added: &mut Vec<&'v str>,
) -> bool {
    let values = [
        Term::Iri(t.subject.clone()),
        Term::Iri(t.predicate.clone()),
        t.object.clone(),
    ];
    for (pos, value) in tp.positions().into_iter().zip(values) {
        match pos {
            PatternTerm::Const(c) => {
                if *c != value {
                    return false;
                }
            }
            PatternTerm::Var(v) => match bindings.get(v.as_str()) {
                Some(bound) if *bound != value => return false,
                Some(_) => {}
                None => {
                    bindings.insert(v.as_str(), value);
                    added.push(v.as_str());
                }
            },
        }
    }
    true
}

fn solve<'v>(
    index: &Index<'_>,
    remaining: &mut Vec<&'v TriplePattern>,
    bindings: &mut HashMap<&'v str, Term>,
    vars: &[String],
    out: &mut BTreeSet<Vec<Term>>,
) {
    if remaining.is_empty() {
        out.insert(vars.iter().map(|v| bindings[v.as_str()].clone()).collect());
        return;
    }
    let (pick, _) = remaining
        .iter()
        .enumerate()
        .map(|(i, tp)| (i, index.candidates(tp, bindings).len()))
        .min_by_key(|&(_, n)| n)
        .expect("non-empty");
    let tp = remaining.swap_remove(pick);
    for t in index.candidates(tp, bindings) {
        let mut added = Vec::new();
        if unify(tp, t, bindings, &mut added) {
            solve(index, remaining, bindings, vars, out);
        }
        for v in added {
            bindings.remove(v);
        }
    }
    remaining.push(tp);
    let last = remaining.len() - 1;
    remaining.swap(pick, last);
}

/// All solutions of the conjunctive pattern over `ts`.
pub fn match_pattern(ts: &TripleSet, pattern: &Pattern) -> BindingSet {
    let index = Index::new(ts);
    let variables = pattern.variables();
    let mut remaining: Vec<&TriplePattern> = pattern.triples().iter().collect();
    let mut rows = BTreeSet::new();
    solve(
        &index,
        &mut remaining,
        &mut HashMap::new(),
        &variables,
        &mut rows,
    );
    BindingSet {
        variables,
        rows: rows.into_iter().collect(),
    }
}
