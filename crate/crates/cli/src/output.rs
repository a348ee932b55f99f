//! Serializable results of the single-query commands.
//!
//! Text output is always rendered from these structs, so the JSON form holds
//! everything needed to reproduce it.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Output {
    Size(SizeOutput),
    Enum(EnumOutput),
    Map(MapOutput),
    Witness(WitnessOutput),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeOutput {
    pub x: String,
    pub q: u32,
    pub t: usize,
    pub s: usize,
    pub p: usize,
    pub size: String,
    pub bound: String,
    pub predicted_equal: bool,
    pub observed_equal: bool,
    pub conditions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumOutput {
    pub x: String,
    pub q: u32,
    pub t: usize,
    pub s: usize,
    pub p: usize,
    pub word_length: usize,
    pub count: usize,
    pub words: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapOutput {
    pub kind: String,
    pub y: String,
    pub x: String,
    pub q: u32,
    pub t: usize,
    pub p: Option<usize>,
    #[serde(rename = "I")]
    pub matched: String,
    #[serde(rename = "J")]
    pub fill: Option<String>,
    #[serde(rename = "K")]
    pub anchors: Option<String>,
    pub z: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessOutput {
    SwapFlip {
        x: String,
        q: u32,
        t: usize,
        p: usize,
        pivot: usize,
        flips: String,
        z: String,
        hamming: usize,
        expected_hamming: usize,
        member: bool,
    },
    DeletionPair {
        x: String,
        q: u32,
        s: usize,
        pivot: usize,
        kept: String,
        u: String,
        v: String,
        distinct: bool,
        members: bool,
    },
    Nonsurjective {
        x: String,
        q: u32,
        t: usize,
        p: usize,
        w: String,
        case: String,
        pivot: usize,
        z: String,
        member: bool,
        prefix_differs: bool,
        tail_not_embedded: bool,
    },
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl WitnessOutput {
    pub fn passed(&self) -> bool {
        match *self {
            WitnessOutput::SwapFlip {
                hamming,
                expected_hamming,
                member,
                ..
            } => member && hamming == expected_hamming,
            WitnessOutput::DeletionPair {
                distinct, members, ..
            } => distinct && members,
            WitnessOutput::Nonsurjective {
                member,
                prefix_differs,
                tail_not_embedded,
                ..
            } => member && prefix_differs && tail_not_embedded,
        }
    }
}

impl Output {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("output serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match self {
            Output::Size(o) => {
                let conditions = if o.conditions.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", o.conditions.join(", "))
                };
                writeln!(
                    out,
                    "size={} bound={} minimal={} observed={}{}",
                    o.size,
                    o.bound,
                    yes_no(o.predicted_equal),
                    yes_no(o.observed_equal),
                    conditions
                )
                .unwrap();
            }
            Output::Enum(o) => {
                for word in &o.words {
                    writeln!(out, "{word}").unwrap();
                }
            }
            Output::Map(o) => {
                writeln!(out, "I={}", o.matched).unwrap();
                if let Some(fill) = &o.fill {
                    writeln!(out, "J={fill}").unwrap();
                }
                if let Some(anchors) = &o.anchors {
                    writeln!(out, "K={anchors}").unwrap();
                }
                writeln!(out, "z={}", o.z).unwrap();
            }
            Output::Witness(w) => {
                match w {
                    WitnessOutput::SwapFlip {
                        pivot,
                        flips,
                        z,
                        hamming,
                        expected_hamming,
                        member,
                        ..
                    } => {
                        writeln!(out, "pivot={pivot} flips={flips}").unwrap();
                        writeln!(
                            out,
                            "z={z} member={} hamming={hamming} expected={expected_hamming}",
                            yes_no(*member)
                        )
                        .unwrap();
                    }
                    WitnessOutput::DeletionPair {
                        pivot,
                        kept,
                        u,
                        v,
                        distinct,
                        members,
                        ..
                    } => {
                        writeln!(out, "pivot={pivot} kept={kept}").unwrap();
                        writeln!(
                            out,
                            "u={u} v={v} distinct={} members={}",
                            yes_no(*distinct),
                            yes_no(*members)
                        )
                        .unwrap();
                    }
                    WitnessOutput::Nonsurjective {
                        w,
                        case,
                        pivot,
                        z,
                        member,
                        prefix_differs,
                        tail_not_embedded,
                        ..
                    } => {
                        writeln!(out, "w={w} case={case} pivot={pivot}").unwrap();
                        writeln!(out, "z={z}").unwrap();
                        writeln!(
                            out,
                            "member={} prefix_differs={} tail_not_embedded={}",
                            yes_no(*member),
                            yes_no(*prefix_differs),
                            yes_no(*tail_not_embedded)
                        )
                        .unwrap();
                    }
                }
                writeln!(out, "verdict={}", if w.passed() { "pass" } else { "fail" }).unwrap();
            }
        }
        out
    }
}
