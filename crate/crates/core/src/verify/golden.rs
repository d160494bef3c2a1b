//! Reference data for `S_3` acting on the nilpotent cone of `sl_3`, transcribed
//! as text and compared entrywise with the pipeline output.

use serde::Deserialize;

use super::{CheckRecord, Status};
use crate::lsalgo::{GradedMatrix, LsResult};
use crate::ring::{LaurentPoly, RatFunc};
use crate::springer::{Label, Partition};

const GOLDEN_A3: &str = include_str!("../../golden/a3.json");

#[derive(Deserialize)]
struct GoldenJson {
    labels: Vec<Partition>,
    #[serde(rename = "P_prefactor_den_factors")]
    p_den: Vec<String>,
    #[serde(rename = "P_numerators")]
    p_num: Vec<Vec<String>>,
    #[serde(rename = "K")]
    k: Vec<Vec<String>>,
    #[serde(rename = "D_den_factors")]
    d_den: Vec<Vec<String>>,
    #[serde(rename = "gch_K")]
    gch_k: Vec<GchJson>,
}

#[derive(Deserialize)]
struct GchJson {
    label: Partition,
    terms: Vec<(Partition, String)>,
}

/// The transcribed matrices, with `gch K_l` as explicit sums of simples.
#[derive(Clone, Debug)]
pub struct Golden {
    pub p: GradedMatrix,
    pub k: GradedMatrix,
    pub d: Vec<RatFunc>,
    pub gch_k: Vec<(Label, Vec<(Label, LaurentPoly)>)>,
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("golden entry {s:?}: {e}"))
}

fn product_inverse(factors: &[String]) -> RatFunc {
    let den: LaurentPoly = factors.iter().map(|f| poly(f)).fold(LaurentPoly::one(), |a, b| &a * &b);
    RatFunc::new(LaurentPoly::one(), den).expect("nonzero")
}

impl Golden {
    pub fn a3() -> Self {
        let g: GoldenJson = serde_json::from_str(GOLDEN_A3).expect("embedded golden parses");
        let labels: Vec<Label> = g.labels.into_iter().map(Label::a).collect();
        let pre = product_inverse(&g.p_den);
        let p = GradedMatrix::from_fn(labels.clone(), |i, j| &pre * &RatFunc::from(poly(&g.p_num[i][j])));
        let k = GradedMatrix::from_fn(labels.clone(), |i, j| RatFunc::from(poly(&g.k[i][j])));
        let d = g.d_den.iter().map(|f| product_inverse(f)).collect();
        let gch_k = g
            .gch_k
            .into_iter()
            .map(|e| (Label::a(e.label), e.terms.into_iter().map(|(l, c)| (Label::a(l), poly(&c))).collect()))
            .collect();
        Self { p, k, d, gch_k }
    }
}

fn rec(name: &str, subject: Vec<Label>, ok: bool, detail: String) -> CheckRecord {
    CheckRecord {
        name: name.into(),
        subject,
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

/// Computed `[P:L]`, `K`, `D` and `gch K` against the transcription.
pub fn check_golden_a3(p: &GradedMatrix, res: &LsResult) -> Vec<CheckRecord> {
    let g = Golden::a3();
    let mut out = Vec::new();
    if p.labels() != g.p.labels() {
        out.push(rec("golden_a3.labels", vec![], false, "label lists differ".into()));
        return out;
    }
    let labels = g.p.labels();
    let m = labels.len();
    for i in 0..m {
        for j in 0..m {
            let subject = vec![labels[i].clone(), labels[j].clone()];
            let (a, b) = (p.get(i, j), g.p.get(i, j));
            out.push(rec("golden_a3.P", subject.clone(), a == b, format!("{a}, expected {b}")));
            let (a, b) = (res.k.get(i, j), g.k.get(i, j));
            out.push(rec("golden_a3.K", subject, a == b, format!("{a}, expected {b}")));
        }
        let (a, b) = (&res.d[i], &g.d[i]);
        out.push(rec("golden_a3.D", vec![labels[i].clone()], a == b, format!("{a}, expected {b}")));
    }
    for (lambda, terms) in &g.gch_k {
        let i = labels.iter().position(|l| l == lambda).expect("golden label");
        for (j, mu) in labels.iter().enumerate() {
            let want = terms
                .iter()
                .find(|(l, _)| l == mu)
                .map(|(_, c)| RatFunc::from(c.clone()))
                .unwrap_or_else(RatFunc::zero);
            let got = res.k.get(i, j);
            out.push(rec(
                "golden_a3.gch_K",
                vec![lambda.clone(), mu.clone()],
                *got == want,
                format!("{got}, expected {want}"),
            ));
        }
    }
    out
}
