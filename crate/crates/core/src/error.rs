//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("stream ({recording}, {channel}): line {line}: begin time {tbeg} precedes previous {prev}")]
    OutOfOrder {
        recording: String,
        channel: String,
        line: usize,
        tbeg: f64,
        prev: f64,
    },

    #[error("line {line}: segment time range [{tbeg}, {tend}) is empty or inverted")]
    BadTimeRange { line: usize, tbeg: f64, tend: f64 },

    #[error("duplicate n-best entry for utterance {utterance} rank {rank}")]
    DuplicateRank { utterance: String, rank: u32 },

    #[error("utterance {utterance}: ranks are not contiguous from 1 (found {found})")]
    RankGap { utterance: String, found: String },

    #[error("no n-best entry matches side score key ({utterance}, {rank})")]
    SideScoreOrphan { utterance: String, rank: u32 },

    #[error("utterance {utterance} rank {rank}: no score from model {model}")]
    MissingScore {
        utterance: String,
        rank: u32,
        model: String,
    },

    #[error("ARPA format: {0}")]
    ArpaFormat(String),

    #[error("ARPA value: {0}")]
    ArpaValue(String),

    #[error("overlapping reference segments on stream ({recording}, {channel}): [{a_beg}, {a_end}) and [{b_beg}, {b_end})")]
    OverlappingSegments {
        recording: String,
        channel: String,
        a_beg: f64,
        a_end: f64,
        b_beg: f64,
        b_end: f64,
    },

    #[error("zero scored reference words: WER is undefined")]
    NoScoredWords,

    #[error("reports are not comparable: {0}")]
    Incomparable(String),

    #[error("invalid normalization rules: {0}")]
    BadNormRules(String),

    #[error("invalid alignment costs: sub_cost {sub} exceeds del_cost {del} + ins_cost {ins}")]
    BadAlignCosts { sub: u32, del: u32, ins: u32 },

    #[error("n-gram order {0} out of supported range 1..=6")]
    BadOrder(usize),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("interpolation component {index} assigns zero probability to every held-out event")]
    DegenerateComponent { index: usize },

    #[error("invalid interpolation weights: {0}")]
    BadWeights(String),

    #[error("selection thresholds out of order: {0}")]
    BadThresholds(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Parse error helper carrying a 1-based line number.
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
