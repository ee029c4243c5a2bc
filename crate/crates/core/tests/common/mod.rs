//! Shared fixtures and independent oracles for the integration suites.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use unicode_normalization::UnicodeNormalization;

use igbo_ngram::text_io::load_document;
use igbo_ngram::Document;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn doc1_path() -> PathBuf {
    fixture("doc1.txt")
}

pub fn doc1() -> Document {
    load_document(&doc1_path()).expect("doc1 fixture")
}

/// Doc1 after lowercasing, tone stripping and punctuation removal, with
/// hyphens kept. Worked out by hand from the fixture.
pub const DOC1_NORMALIZED_GOLDEN: &str = "kpaacharu anya makana projekto nkuziie a achoghi okwu ntughe \
ndi ichoghi ka ha hu ga ahụ ihe-ngosi gi oburu na ichoro iji projekto nkuziie a were ruo oru pikinye \
jikoo a na-akwunye projekto nkuziie na komputa nkunaka iji mee ihe onyonyo komputa nkunaka banyere \
na projekto nkuziie ocha";

/// The golden-mode filtered sequence, derived by hand (36 tokens).
pub const DOC1_FILTERED_GOLDEN: [&str; 36] = [
    "kpaacharu", "anya", "projekto", "nkuziie", "achoghi", "okwu", "ntughe", "ichoghi", "hu",
    "ihe-ngosi", "gi", "oburu", "ichoro", "iji", "projekto", "nkuziie", "were", "ruo", "oru",
    "pikinye", "jikoo", "na-akwunye", "projekto", "nkuziie", "komputa", "nkunaka", "iji", "mee",
    "ihe", "onyonyo", "komputa", "nkunaka", "banyere", "projekto", "nkuziie", "ocha",
];

/// The strict-mode filtered sequence, derived by hand: hyphens split, "na"
/// removed as a stop word, "gi" and "hu" removed for length (35 tokens).
pub const DOC1_FILTERED_STRICT: [&str; 35] = [
    "kpaacharu", "anya", "projekto", "nkuziie", "achoghi", "okwu", "ntughe", "ichoghi", "ihe",
    "ngosi", "oburu", "ichoro", "iji", "projekto", "nkuziie", "were", "ruo", "oru", "pikinye",
    "jikoo", "akwunye", "projekto", "nkuziie", "komputa", "nkunaka", "iji", "mee", "ihe",
    "onyonyo", "komputa", "nkunaka", "banyere", "projekto", "nkuziie", "ocha",
];

/// The full sample stop list, including "gi".
pub const SAMPLE_STOPLIST_WITH_GI: &str = "ndi, nke, a, i, j, o, o, na, bu, m, mu, ma, ha, unu, ya, \
anyi, gi, niine, nile, ngi, ahụ, dum, niile, ga, ka, mana, maka, makana, tupu, e, kwa, nta, naani, \
ugbua, olee, otu, abuo, atọ, anọ, ise, isii, asaa, asato, iteghete, iri, anyi, ndi, a, n', g', ufodu, \
nari, puku";

/// Reference unigram table rows.
pub const UNIGRAM_ROWS: [(&str, u64); 27] = [
    ("achoghi", 1), ("anya", 1), ("banyere", 1), ("gi", 1), ("hu", 1), ("ihe", 1),
    ("ihe-ngosi", 1), ("iji", 2), ("jikoo", 1), ("komputa", 2), ("mee", 1), ("na-akwunye", 1),
    ("nkunaka", 2), ("kpaacharu", 1), ("nkuziie", 4), ("ntughe", 1), ("okwu", 1), ("onyonyo", 1),
    ("projekto", 4), ("pikinye", 1), ("ruo", 1), ("were", 1), ("ichoghi", 1), ("ichoro", 1),
    ("oburu", 1), ("ocha", 1), ("oru", 1),
];

/// Reference bigram table rows (30; "ichoro iji" is absent from the reference).
pub const BIGRAM_ROWS: [(&str, u64); 30] = [
    ("projekto nkuziie", 4), ("kpaacharu anya", 1), ("komputa nkunaka", 2), ("anya projekto", 1),
    ("achoghi okwu", 1), ("oru pikinye", 1), ("na-akwunye projekto", 1), ("nkunaka iji", 1),
    ("oburu ichoro", 1), ("ichoghi hu", 1), ("iji mee", 1), ("ruo oru", 1), ("were ruo", 1),
    ("nkuziie komputa", 1), ("ihe onyonyo", 1), ("onyonyo komputa", 1), ("nkunaka banyere", 1),
    ("jikoo na-akwunye", 1), ("okwu ntughe", 1), ("mee ihe", 1), ("nkuziie were", 1),
    ("hu ihe-ngosi", 1), ("pikinye jikoo", 1), ("nkuziie achoghi", 1), ("banyere projekto", 1),
    ("ntughe ichoghi", 1), ("nkuziie ocha", 1), ("gi oburu", 1), ("iji projekto", 1),
    ("ihe-ngosi gi", 1),
];

/// Reference trigram table rows, spelled as given (dotted "achoghị",
/// unhyphenated "ihengosi").
pub const TRIGRAM_ROWS: [(&str, u64); 34] = [
    ("ntughe ichoghi hu", 1), ("nkunaka banyere projekto", 1), ("projekto nkuziie were", 1),
    ("oru pikinye jikoo", 1), ("projekto nkuziie komputa", 1), ("ichoro iji projekto", 1),
    ("gi oburu ichoro", 1), ("komputa nkunaka banyere", 1), ("ihe onyonyo komputa", 1),
    ("nkunaka iji mee", 1), ("projekto nkuziie ocha", 1), ("pikinye jikoo na-akwunye", 1),
    ("okwu ntughe ichoghị", 1), ("ruo oru pikinye", 1), ("nkuziie komputa nkunaka", 1),
    ("onyonyo komputa nkunaka", 1), ("komputa nkunaka iji", 1), ("hu ihe-ngosi gi", 1),
    ("jikoo na-akwunye projekto", 1), ("iji mee ihe", 1), ("achoghị okwu ntughe", 1),
    ("nkuziie were ruo", 1), ("ihe-ngosi gi oburu", 1), ("banyere projekto nkuziie", 1),
    ("were ruo oru", 1), ("nkuziie achoghị okwu", 1), ("ichoghị hu ihengosi", 1),
    ("kpaacharu anya projekto", 1), ("anya projekto nkuziie", 1), ("projekto nkuziie achoghị", 1),
    ("oburu ichoro iji", 1), ("na-akwunye projekto nkuziie", 1), ("mee ihe onyonyo", 1),
    ("iji projekto nkuziie", 1),
];

/// Comparison key that ignores the dot below and hyphens, absorbing the
/// spelling drift between the reference tables.
pub fn tolerant_key(gram: &str) -> String {
    gram.nfd()
        .filter(|&c| c != '\u{0323}' && c != '-')
        .nfc()
        .collect()
}

/// Brute-force window count: every start position, key = space-joined words.
pub fn naive_ngram_counts(words: &[&str], n: usize) -> BTreeMap<String, u64> {
    let mut out = BTreeMap::new();
    if n == 0 || words.len() < n {
        return out;
    }
    let mut start = 0;
    while start + n <= words.len() {
        let mut key = String::new();
        for k in 0..n {
            if k > 0 {
                key.push(' ');
            }
            key.push_str(words[start + k]);
        }
        *out.entry(key).or_insert(0) += 1;
        start += 1;
    }
    out
}

/// Windows of order `n` that straddle the cut between positions `cut-1` and `cut`.
pub fn boundary_windows(words: &[&str], n: usize, cut: usize) -> BTreeMap<String, u64> {
    let mut out = BTreeMap::new();
    for start in 0..words.len() {
        let end = start + n;
        if end <= words.len() && start < cut && cut < end {
            *out.entry(words[start..end].join(" ")).or_insert(0) += 1;
        }
    }
    out
}

pub fn table_as_map(t: &igbo_ngram::NGramTable) -> BTreeMap<String, u64> {
    t.iter().map(|(g, c)| (g.to_string(), c)).collect()
}

pub mod strategies {
    use proptest::prelude::*;

    /// Igbo letters (digraphs included) plus the plain a-z set.
    pub const IGBO_LETTERS: &[&str] = &[
        "a", "b", "ch", "d", "e", "f", "g", "gb", "gh", "gw", "h", "i", "ị", "j", "k", "kw", "kp",
        "l", "m", "n", "nw", "ny", "ñ", "o", "ọ", "p", "r", "s", "sh", "t", "u", "ụ", "v", "w", "y",
        "z", "c", "q", "x",
    ];

    /// Pieces that exercise every normalizer branch.
    const NOISY_PIECES: &[&str] = &[
        "a", "e", "ị", "ọ", "ụ", "n", "kw", "gb", "A", "Ọ", "Ụ", "Ị", "KP", "à", "é", "ō", "ù",
        "ụ\u{0301}", "o\u{0323}\u{0300}", "E\u{0300}", " ", "  ", "\n", "\t", "-", "'", "\u{2019}",
        ",", ".", "\"", "“", "”", ":", ";", "?", "!", "(", ")", "[", "]", "{", "}", "+", "&", "<",
        ">", "/", "@", "*", "=", "^", "%", "£", "€", "₦", "$", "0", "7", "na-", "n’",
    ];

    pub fn igbo_word() -> impl Strategy<Value = String> {
        prop::collection::vec(prop::sample::select(IGBO_LETTERS), 1..6).prop_map(|v| v.concat())
    }

    pub fn igbo_text() -> impl Strategy<Value = String> {
        prop::collection::vec(igbo_word(), 0..12).prop_map(|v| v.join(" "))
    }

    pub fn noisy_text() -> impl Strategy<Value = String> {
        prop::collection::vec(prop::sample::select(NOISY_PIECES), 0..40).prop_map(|v| v.concat())
    }

    /// Token streams over a small vocabulary so n-grams repeat.
    pub fn small_vocab_stream(max_len: usize) -> impl Strategy<Value = Vec<String>> {
        prop::collection::vec(
            prop::sample::select(&["a", "b", "c", "d", "ụlọ", "na-ese"][..]).prop_map(String::from),
            0..=max_len,
        )
    }
}
