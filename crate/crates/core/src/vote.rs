use crate::label::GenderLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("cannot combine an empty list of labels")]
pub struct EmptyVote;

/// Majority vote over per-dictionary labels.
///
/// `NotFound` casts no vote. A label wins when it holds a strict majority of
/// the votes cast; any tie or three-way split falls back to `Neut`. Only when
/// no dictionary found the word at all is the result `NotFound`.
pub fn combine(labels: &[GenderLabel]) -> Result<GenderLabel, EmptyVote> {
    if labels.is_empty() {
        return Err(EmptyVote);
    }
    let mut tally = [0usize; 3];
    for label in labels {
        match label {
            GenderLabel::NotFound => {}
            found => tally[found.index()] += 1,
        }
    }
    let cast: usize = tally.iter().sum();
    if cast == 0 {
        return Ok(GenderLabel::NotFound);
    }
    Ok(GenderLabel::GOLD
        .into_iter()
        .find(|label| 2 * tally[label.index()] > cast)
        .unwrap_or(GenderLabel::Neut))
}
