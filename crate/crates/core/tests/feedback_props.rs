mod common;

use common::{oracle_code, oracle_score, random_word};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wordbins::{score, Color, Pattern, PatternTable, Word};

fn w(s: &str) -> Word {
    Word::new(s).unwrap()
}

fn word_strategy(
    len: std::ops::RangeInclusive<usize>,
    alphabet: &'static str,
) -> impl Strategy<Value = String> {
    len.prop_flat_map(move |n| {
        proptest::string::string_regex(&format!("[{alphabet}]{{{n}}}")).unwrap()
    })
}

#[test]
fn matches_reference_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    // small alphabets force repeated letters; the full one covers the rest
    let alphabets: [&[u8]; 3] = [b"ab", b"abcde", b"abcdefghijklmnopqrstuvwxyz"];
    for i in 0..100_000 {
        let alphabet = alphabets[i % 3];
        let len = if i % 5 == 0 { rng.gen_range(1..=10) } else { 5 };
        let g = random_word(&mut rng, len, alphabet);
        let s = random_word(&mut rng, len, alphabet);
        let got = score(&w(&g), &w(&s)).unwrap();
        assert_eq!(got.to_string(), oracle_score(&g, &s), "score({g}, {s})");
        assert_eq!(got.code(), oracle_code(&got.to_string()));
    }
}

#[test]
fn worked_examples() {
    for (g, s, want) in [
        ("trace", "trace", "GGGGG"),
        ("raise", "cloth", "BBBBB"),
        ("speed", "abide", "BBYBY"),
        ("eerie", "there", "YBYBG"),
        ("llama", "hello", "YYBBB"),
    ] {
        assert_eq!(oracle_score(g, s), want, "oracle {g}/{s}");
        assert_eq!(score(&w(g), &w(s)).unwrap().to_string(), want, "{g}/{s}");
    }
}

#[test]
fn no_lone_misplaced_letter_exhaustive() {
    // every ordered pair over a 3-letter alphabet, lengths 1 through 4
    let alphabet = b"abc";
    for len in 1..=4usize {
        let all: Vec<String> = (0..3usize.pow(len as u32))
            .map(|mut k| {
                let mut s = vec![b'a'; len];
                for slot in s.iter_mut().rev() {
                    *slot = alphabet[k % 3];
                    k /= 3;
                }
                String::from_utf8(s).unwrap()
            })
            .collect();
        for g in &all {
            for s in &all {
                let p = score(&w(g), &w(s)).unwrap();
                let colors = p.colors();
                let greens = colors.iter().filter(|&&c| c == Color::Green).count();
                let yellows = colors.iter().filter(|&&c| c == Color::Yellow).count();
                assert!(!(greens == len - 1 && yellows == 1), "{g}/{s} -> {p}");
            }
        }
    }
}

#[test]
fn code_bijection_all_243() {
    let mut seen = vec![false; 243];
    for code in 0..243u32 {
        let p = Pattern::decode(code, 5).unwrap();
        assert_eq!(p.code(), code);
        assert_eq!(oracle_code(&p.to_string()), code);
        assert_eq!(Pattern::parse(&p.to_string(), 5).unwrap(), p);
        assert_eq!(Pattern::from_colors(&p.colors()).unwrap(), p);
        assert!(!std::mem::replace(&mut seen[code as usize], true));
    }
    assert!(Pattern::decode(243, 5).is_err());
    assert_eq!(Pattern::all_green(5).code(), 242);
    assert_eq!(Pattern::parse("YBBBB", 5).unwrap().code(), 81);
    assert_eq!(Pattern::parse("BBBBB", 5).unwrap().code(), 0);
}

#[test]
fn parse_rejects_bad_text() {
    for bad in ["GGGG", "GGGGGG", "GGGGA", "ggggg", ""] {
        assert!(Pattern::parse(bad, 5).is_err(), "{bad}");
    }
    assert!(score(&w("abc"), &w("abcd")).is_err());
}

#[test]
fn table_agrees_with_direct_scoring() {
    let mut rng = StdRng::seed_from_u64(7);
    let guesses: Vec<String> = common::random_words(&mut rng, 40, 5, b"abcdefg");
    let secrets: Vec<String> = common::random_words(&mut rng, 30, 5, b"abcdefg");
    let table = PatternTable::new(
        &common::lexicon("g", &guesses),
        &common::lexicon("s", &secrets),
    )
    .unwrap();
    for (i, g) in guesses.iter().enumerate() {
        for (j, s) in secrets.iter().enumerate() {
            assert_eq!(table.code(i, j) as u32, oracle_code(&oracle_score(g, s)));
        }
    }
}

proptest! {
    #[test]
    fn identity_is_all_green(word in word_strategy(1..=10, "a-z")) {
        let word = w(&word);
        prop_assert!(score(&word, &word).unwrap().is_all_green());
    }

    #[test]
    fn marks_never_exceed_secret_letters(
        (g, s) in (1usize..=8).prop_flat_map(|n| {
            let letters = proptest::collection::vec(b'a'..=b'd', n);
            (letters.clone(), letters)
        })
    ) {
        let (g, s) = (String::from_utf8(g).unwrap(), String::from_utf8(s).unwrap());
        let colors = score(&w(&g), &w(&s)).unwrap().colors();
        for letter in b'a'..=b'd' {
            let marked = g.bytes().zip(&colors).filter(|&(c, col)| c == letter && *col != Color::Gray).count();
            let available = s.bytes().filter(|&c| c == letter).count();
            prop_assert!(marked <= available);
        }
        for (i, col) in colors.iter().enumerate() {
            prop_assert_eq!(*col == Color::Green, g.as_bytes()[i] == s.as_bytes()[i]);
        }
    }
}
