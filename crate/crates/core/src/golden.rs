//! Worked examples with known answers, replayed as a fast regression gate.
//! Each vector compares rendered text byte for byte.

use serde::Serialize;

use crate::bn::{descent_data, enumerate_reduced_words, is_reduced_word_for_w0, rotate, rotate_by};
use crate::csp::{orbit_census, verify_csp, CyclicActionSpec, SetId};
use crate::error::Result;
use crate::haiman::{h, phi, psi_inverse};
use crate::insertion::{crystal_e, q_shifted, rsk};
use crate::promotion::{embed_square, rectify, Promote};
use crate::qpoly::{kappa, q_hook_rectangle, root_evaluations};
use crate::tableau::{enumerate_syt, Partition, ShiftedStandardTableau, StandardTableau};
use crate::word::Word;

#[derive(Clone, Debug, Serialize)]
pub struct GoldenResult {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
}

impl GoldenResult {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn syt(s: &str) -> Result<StandardTableau> {
    s.parse()
}

fn ssyt(s: &str) -> Result<ShiftedStandardTableau> {
    s.parse()
}

fn word(s: &str) -> Result<Word> {
    s.parse()
}

fn set_text<I: IntoIterator<Item = usize>>(items: I) -> String {
    let parts = items.into_iter().map(|i| i.to_string()).collect::<Vec<_>>();
    format!("{{{}}}", parts.join(","))
}

fn orbit_text<T: Clone + PartialEq + ToString>(start: &T, act: impl Fn(&T) -> T) -> String {
    let mut out = vec![start.to_string()];
    let mut cur = act(start);
    while cur != *start {
        out.push(cur.to_string());
        cur = act(&cur);
    }
    out.join(" -> ")
}

/// Runs every golden vector.
pub fn run() -> Result<Vec<GoldenResult>> {
    let mut out = Vec::new();
    let mut push = |name, expected: &str, actual: String| {
        out.push(GoldenResult {
            name,
            expected: expected.to_string(),
            actual,
        })
    };

    push(
        "promotion",
        "1367/258/4",
        syt("1248/367/5")?.promote().to_string(),
    );
    push(
        "square-orbit",
        "125/368/479 -> 147/258/369 -> 136/247/589",
        orbit_text(&syt("125/368/479")?, StandardTableau::promote),
    );
    push(
        "shifted-orbit",
        "12458/369/7 -> 12347/568/9 -> 12369/457/8",
        orbit_text(&ssyt("12458/369/7")?, ShiftedStandardTableau::promote),
    );
    push(
        "rectification",
        "12458/369/7",
        rectify(&embed_square(&syt("125/368/479")?)?).to_string(),
    );
    push("h", "12458/369/7", h(&syt("125/368/479")?)?.to_string());
    push("phi", "132132132", phi(&ssyt("12458/369/7")?)?.to_string());
    push(
        "psi-inverse",
        "125/368/479",
        psi_inverse(&word("132132132")?)?.to_string(),
    );

    let pair = rsk(&word("332132121")?);
    push("rsk-recording", "125/368/479", pair.q.to_string());
    let p_rows = pair
        .p
        .rows()
        .iter()
        .map(|r| r.iter().map(u8::to_string).collect::<String>())
        .collect::<Vec<_>>()
        .join("/");
    push("rsk-insertion", "111/222/333", p_rows);
    push(
        "shifted-recording",
        "12458/369/7",
        q_shifted(&word("332132121")?).to_string(),
    );
    push(
        "crystal-e2",
        "3121231332",
        crystal_e(&word("3121221332")?, 2)?.to_string(),
    );

    let w = word("121323123")?;
    push("maj", "12", descent_data(&w).maj.to_string());
    push("descents", "{2,4,6}", set_text(descent_data(&w).descents));
    push(
        "cyclic-descents",
        "{0,2,3,5,6,8}",
        set_text(descent_data(&word("132132132")?).cyclic_descents),
    );
    push(
        "cyclic-maj",
        "24",
        descent_data(&word("132132132")?).cyclic_maj().to_string(),
    );
    push(
        "reduced-121323123",
        "true",
        is_reduced_word_for_w0(&w, 3).to_string(),
    );
    push(
        "rotation-orbit",
        "121323123 -> 213231231 -> 132312312 -> 323123121 -> 231231213 -> 312312132 -> 123121323 -> 231213231 -> 312132312",
        orbit_text(&w, |x| rotate(x).expect("nonempty")),
    );
    push("rotation-order", "121323123", rotate_by(&w, 9)?.to_string());
    let small = word("213213213")?;
    push(
        "cyclic-order-3",
        "3",
        orbit_text(&small, |x| rotate(x).expect("nonempty"))
            .split(" -> ")
            .count()
            .to_string(),
    );

    push(
        "reduced-words-n3",
        "42",
        enumerate_reduced_words(3)?.len().to_string(),
    );
    push(
        "square-tableaux-n3",
        "42",
        enumerate_syt(&Partition::square(3))?.len().to_string(),
    );
    push(
        "x-n3",
        "1 + q^2 + 2q^3 + 2q^4 + 2q^5 + 4q^6 + 3q^7 + 4q^8 + 4q^9 + 4q^10 + 3q^11 + 4q^12 + 2q^13 + 2q^14 + 2q^15 + q^16 + q^18",
        q_hook_rectangle(3, 3)?.to_string(),
    );
    push("kappa-n3", "9", kappa(&Partition::square(3)).to_string());
    let evals = root_evaluations(&q_hook_rectangle(3, 3)?, 9)?;
    push(
        "root-table-n3",
        "42,0,0,6,0,0,6,0,0",
        evals
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    let report = verify_csp(CyclicActionSpec::new(SetId::ReducedWords, 3))?;
    push(
        "csp-words-n3",
        "pass 42,0,0,6,0,0,6,0,0",
        format!(
            "{} {}",
            if report.passed() { "pass" } else { "fail" },
            report
                .table
                .counts
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
    );
    let census = orbit_census(CyclicActionSpec::new(SetId::ReducedWords, 3))?;
    push(
        "census-words-n3",
        "{\"3\":2,\"9\":4}",
        serde_json::to_string(&census)?,
    );

    push(
        "json-straight",
        r#"{"kind":"straight","shape":[3,3,3],"rows":[[1,2,5],[3,6,8],[4,7,9]]}"#,
        syt("125/368/479")?.to_json(),
    );
    push(
        "json-shifted",
        r#"{"kind":"shifted","shape":[5,3,1],"rows":[[1,2,4,5,8],[3,6,9],[7]]}"#,
        ssyt("12458/369/7")?.to_json(),
    );
    Ok(out)
}
