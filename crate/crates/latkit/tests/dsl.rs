//! Round-trip and canonicalization properties of the sentence DSL, over a
//! fixed corpus covering every axiom the workbench relies on, plus
//! generated terms.

mod common;

use common::{LATTICE_CORPUS, RL_CORPUS};
use latkit::logic::{parse_sentence, pre_transform, Sentence, SentenceKind, Signature};
use proptest::prelude::*;

fn reparse(s: &Sentence, sig: Signature) -> Sentence {
    parse_sentence(&s.to_string(), sig).expect("printed sentence parses")
}

#[test]
fn corpus_is_large_enough() {
    assert!(LATTICE_CORPUS.len() + RL_CORPUS.len() >= 30);
}

#[test]
fn corpus_round_trips() {
    for text in LATTICE_CORPUS {
        let s = parse_sentence(text, Signature::Lattice).expect(text);
        assert_eq!(reparse(&s, Signature::Lattice), s, "round-trip of {text}");
        // canonical printing is idempotent
        assert_eq!(reparse(&s, Signature::Lattice).to_string(), s.to_string());
    }
    for text in RL_CORPUS {
        let s = parse_sentence(text, Signature::Rl).expect(text);
        assert_eq!(reparse(&s, Signature::Rl), s, "round-trip of {text}");
        assert_eq!(reparse(&s, Signature::Rl).to_string(), s.to_string());
    }
}

#[test]
fn lattice_corpus_translates() {
    for text in LATTICE_CORPUS {
        let s = parse_sentence(text, Signature::Lattice).expect(text);
        if matches!(s.kind, SentenceKind::QuasiEquation { .. }) {
            continue;
        }
        let pre = pre_transform(&s).expect("translation succeeds on positive universals");
        // translations are equations over the residuated signature and
        // themselves round-trip
        assert!(matches!(pre.kind, SentenceKind::Equation(_)));
        assert_eq!(reparse(&pre, Signature::Rl), pre);
    }
}

// ------------------------------------------------------------------
// Generated sentences
// ------------------------------------------------------------------

fn arb_term(sig: Signature) -> impl Strategy<Value = latkit::logic::Term> {
    use latkit::logic::Term;
    let leaf = prop_oneof![
        (0usize..4).prop_map(Term::Var),
        Just(Term::Unit),
    ];
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let lattice_ops = prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| Term::Meet(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| Term::Join(Box::new(l), Box::new(r))),
        ];
        if sig == Signature::Lattice {
            lattice_ops.boxed()
        } else {
            prop_oneof![
                lattice_ops,
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Term::Mul(Box::new(l), Box::new(r))),
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Term::LDiv(Box::new(l), Box::new(r))),
                (inner.clone(), inner)
                    .prop_map(|(l, r)| Term::RDiv(Box::new(l), Box::new(r))),
            ]
            .boxed()
        }
    })
}

fn arb_atom(sig: Signature) -> impl Strategy<Value = latkit::logic::Atom> {
    use latkit::logic::{Atom, Rel};
    (arb_term(sig), arb_term(sig), prop::bool::ANY).prop_map(|(lhs, rhs, le)| Atom {
        lhs,
        rel: if le { Rel::Le } else { Rel::Eq },
        rhs,
    })
}

fn arb_sentence(sig: Signature) -> impl Strategy<Value = Sentence> {
    let vars = vec![
        "x".to_string(),
        "y".to_string(),
        "z".to_string(),
        "w".to_string(),
    ];
    let v1 = vars.clone();
    let v2 = vars;
    prop_oneof![
        prop::collection::vec(arb_atom(sig), 1..4).prop_map(move |atoms| Sentence {
            kind: SentenceKind::PositiveUniversal(atoms),
            vars: v1.clone(),
        }),
        (prop::collection::vec(arb_atom(sig), 1..3), arb_atom(sig)).prop_map(
            move |(premises, conclusion)| Sentence {
                kind: SentenceKind::QuasiEquation {
                    premises,
                    conclusion,
                },
                vars: v2.clone(),
            }
        ),
    ]
}

proptest! {
    // Printing then parsing stabilizes after one pass: the reparse may
    // renumber variables by first occurrence, but the rendered string and
    // the second reparse are fixed points.
    #[test]
    fn printing_canonicalizes(s in arb_sentence(Signature::Rl)) {
        let text = s.to_string();
        let once = parse_sentence(&text, Signature::Rl).expect("printed sentence parses");
        prop_assert_eq!(once.to_string(), text);
        let twice = parse_sentence(&once.to_string(), Signature::Rl).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn lattice_sentences_reject_rl_ops(s in arb_sentence(Signature::Lattice)) {
        let text = s.to_string();
        let parsed = parse_sentence(&text, Signature::Lattice).expect("lattice signature suffices");
        prop_assert!(!parsed.uses_rl_ops());
    }
}
