mod common;

use common::{lexicon, oracle_score, random_words, replay_counts, words};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use wordbins::{
    build_tree, build_tree_from, evaluate, legal_guesses, load_tree, serialize_tree, Constraints,
    Game, HeuristicId, HeuristicSpec, Mode, Pattern, StrategyNode, Word,
};

fn specs() -> Vec<HeuristicSpec> {
    let mut out = Vec::new();
    for (i, &h) in HeuristicId::ALL.iter().enumerate() {
        let mode = Mode::ALL[i % 3];
        out.push(HeuristicSpec::new(h).with_mode(mode));
        out.push(
            HeuristicSpec::new(HeuristicId::NegNumBins)
                .with_tiebreak(h)
                .with_mode(Mode::ALL[(i + 1) % 3]),
        );
    }
    out
}

/// Hand-written hard-mode rule: every earlier green stays in place and every
/// letter marked green or yellow appears at least as often as it was marked.
fn hard_oracle(history: &[(String, String)], word: &str) -> bool {
    let w = word.as_bytes();
    history.iter().all(|(g, p)| {
        let (g, p) = (g.as_bytes(), p.as_bytes());
        let greens_kept = (0..g.len()).all(|i| p[i] != b'G' || w[i] == g[i]);
        let letters_kept = g.iter().all(|&c| {
            let marked = (0..g.len()).filter(|&i| g[i] == c && p[i] != b'B').count();
            w.iter().filter(|&&x| x == c).count() >= marked
        });
        greens_kept && letters_kept
    })
}

fn consistent_oracle(history: &[(String, String)], word: &str) -> bool {
    history.iter().all(|(g, p)| oracle_score(g, word) == *p)
}

#[test]
fn trees_are_total_consistent_and_legal() {
    let mut rng = StdRng::seed_from_u64(42);
    for (round, spec) in specs().into_iter().enumerate() {
        let n = rng.gen_range(8..=40);
        let all = random_words(&mut rng, n + 15, 4, b"abcdef");
        let solutions = all[..n].to_vec();
        // half the rounds guess from a wider list than the solutions
        let guesses = if round % 2 == 0 {
            solutions.clone()
        } else {
            all.clone()
        };
        let game = Game::new(lexicon("s", &solutions), lexicon("g", &guesses)).unwrap();
        let tree = build_tree(&game, &spec).unwrap();

        let counts = replay_counts(&tree, &solutions);
        let report = evaluate(&tree, game.solutions()).unwrap();
        assert_eq!(
            report.total_guesses,
            counts.iter().map(|&c| c as u64).sum::<u64>()
        );
        assert_eq!(report.max_guesses, *counts.iter().max().unwrap());
        assert_eq!(report.solutions, solutions.len());

        tree.root
            .walk(&mut |node: &StrategyNode, path: &[(&Word, Pattern)]| {
                let history: Vec<(String, String)> = path
                    .iter()
                    .map(|(g, p)| (g.to_string(), p.to_string()))
                    .collect();
                let remaining: Vec<&String> = solutions
                    .iter()
                    .filter(|s| consistent_oracle(&history, s))
                    .collect();
                assert!(
                    !remaining.is_empty(),
                    "{}: empty node at {history:?}",
                    spec.label()
                );
                let guess = node.guess.as_str();
                match spec.mode {
                    Mode::Regular => {}
                    Mode::Hard => {
                        assert!(hard_oracle(&history, guess), "{guess} after {history:?}")
                    }
                    Mode::Superhard => assert!(
                        consistent_oracle(&history, guess),
                        "{guess} after {history:?}"
                    ),
                }
                if remaining.len() <= 2 {
                    assert_eq!(guess, remaining[0].as_str());
                }
                let in_set = remaining.iter().any(|s| s.as_str() == guess);
                let child_total: usize = node
                    .children
                    .keys()
                    .map(|p| {
                        remaining
                            .iter()
                            .filter(|s| oracle_score(guess, s) == p.to_string())
                            .count()
                    })
                    .sum();
                assert_eq!(child_total, remaining.len() - in_set as usize);
                assert!(node.children.keys().all(|p| !p.is_all_green()));
            });
    }
}

#[test]
fn legal_sets_nest() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..100 {
        let pool = random_words(&mut rng, 80, 5, b"abcdefg");
        let secret = pool.choose(&mut rng).unwrap();
        let mut history = Vec::new();
        let mut constraints = Constraints::new();
        for _ in 0..rng.gen_range(0..=3) {
            let g = pool.choose(&mut rng).unwrap();
            let p = oracle_score(g, secret);
            constraints
                .push(Word::new(g).unwrap(), Pattern::parse(&p, 5).unwrap())
                .unwrap();
            history.push((g.clone(), p));
        }
        let lex = lexicon("pool", &pool);
        let regular = legal_guesses(&lex, Mode::Regular, &constraints);
        let hard = legal_guesses(&lex, Mode::Hard, &constraints);
        let superhard = legal_guesses(&lex, Mode::Superhard, &constraints);
        assert_eq!(regular, words(&pool));
        let want_hard: Vec<&String> = pool.iter().filter(|w| hard_oracle(&history, w)).collect();
        let want_super: Vec<&String> = pool
            .iter()
            .filter(|w| consistent_oracle(&history, w))
            .collect();
        assert_eq!(hard.iter().map(Word::as_str).collect::<Vec<_>>(), want_hard);
        assert_eq!(
            superhard.iter().map(Word::as_str).collect::<Vec<_>>(),
            want_super
        );
        assert!(superhard.iter().all(|w| hard.contains(w)));
        assert!(superhard.iter().any(|w| w.as_str() == secret));
    }
}

#[test]
fn hard_mode_green_example() {
    let lex =
        wordbins::Lexicon::from_strs("t", &["crane", "cloth", "trace", "chess", "brace"]).unwrap();
    let c = Constraints::parse("crane=GBBBB", 5).unwrap();
    let got: Vec<String> = legal_guesses(&lex, Mode::Hard, &c)
        .iter()
        .map(|w| w.to_string())
        .collect();
    assert_eq!(got, ["crane", "cloth", "chess"]);
    assert_eq!(
        legal_guesses(&lex, Mode::Superhard, &Constraints::new()).len(),
        5
    );
}

#[test]
fn evaluation_matches_replay_on_ten_words() {
    let list: Vec<String> = [
        "cigar", "rebut", "sissy", "humph", "awake", "blush", "focal", "evade", "naval", "serve",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for spec in specs() {
        let tree = build_tree_from(&lexicon("ten", &list), None, &spec).unwrap();
        let counts = replay_counts(&tree, &list);
        let report = evaluate(&tree, &lexicon("ten", &list)).unwrap();
        let mean = counts.iter().sum::<u32>() as f64 / counts.len() as f64;
        assert!((report.average() - mean).abs() < 1e-12);
        let within6 = counts.iter().filter(|&&c| c <= 6).count() as f64 * 100.0 / 10.0;
        assert!((report.pct6() - within6).abs() < 1e-9);
        assert_eq!(report.histogram.values().sum::<usize>(), 10);
    }
}

#[test]
fn serialization_round_trips_and_is_deterministic() {
    let mut rng = StdRng::seed_from_u64(8);
    for spec in specs() {
        let solutions = random_words(&mut rng, 60, 5, b"abcdefghij");
        let lex = lexicon("s", &solutions);
        let first = serialize_tree(&build_tree_from(&lex, None, &spec).unwrap());
        let second = serialize_tree(&build_tree_from(&lex, None, &spec).unwrap());
        assert_eq!(first, second, "{}", spec.label());
        let reloaded = load_tree(&first).unwrap();
        assert_eq!(serialize_tree(&reloaded), first);
    }
}

#[test]
fn load_rejects_malformed_documents() {
    for doc in [
        r#"{"guess":"crane","children":{"GGGGA":{"guess":"trace","children":{}}}}"#,
        r#"{"guess":"crane","children":{"GGGGG":{"guess":"trace","children":{}}}}"#,
        r#"{"guess":"crane","children":{"BBBB":{"guess":"trace","children":{}}}}"#,
        r#"{"guess":"crane","children":{"BBBBB":{"guess":"tra","children":{}}}}"#,
        r#"{"guess":"crane","children":{},"extra":1}"#,
        r#"{"guess":"Crane","children":{}}"#,
        r#"{"children":{}}"#,
        "not json",
    ] {
        assert!(load_tree(doc).is_err(), "{doc}");
    }
    let one = load_tree(r#"{"guess":"crane","children":{}}"#).unwrap();
    assert_eq!(serialize_tree(&one), r#"{"guess":"crane","children":{}}"#);
}

#[test]
fn single_solution_any_mode() {
    for mode in Mode::ALL {
        let spec = HeuristicSpec::default().with_mode(mode);
        let tree = build_tree_from(
            &wordbins::Lexicon::from_strs("one", &["crane"]).unwrap(),
            None,
            &spec,
        )
        .unwrap();
        assert_eq!(serialize_tree(&tree), r#"{"guess":"crane","children":{}}"#);
    }
}
