//! Folding a histogram into one final ordering.

use crate::Histogram;

#[derive(Clone, Debug, PartialEq)]
pub struct Priority {
    pub tag: String,
    pub mean_position: f64,
    pub first_places: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Prioritisation {
    /// best first
    pub ranking: Vec<Priority>,
    /// how each tie on mean position was broken
    pub trace: Vec<String>,
}

/// Order tags by ascending mean position; ties go to the tag placed first
/// more often, then to name order. Assumes every row was filled by the same
/// number of outcomes.
pub fn prioritise(histogram: &Histogram) -> Prioritisation {
    let mut ranking: Vec<Priority> = histogram
        .tags()
        .iter()
        .map(|tag| Priority {
            tag: tag.clone(),
            mean_position: histogram.mean_position(tag).unwrap_or(f64::INFINITY),
            first_places: histogram.row(tag).map_or(0, |row| row[0]),
        })
        .collect();
    ranking.sort_by(|x, y| {
        x.mean_position
            .total_cmp(&y.mean_position)
            .then_with(|| y.first_places.cmp(&x.first_places))
            .then_with(|| x.tag.cmp(&y.tag))
    });
    let mut trace = Vec::new();
    for pair in ranking.windows(2) {
        if pair[0].mean_position == pair[1].mean_position {
            let how = if pair[0].first_places != pair[1].first_places {
                "first-place count"
            } else {
                "name order"
            };
            trace.push(format!(
                "tie at mean {:.4} between {} and {}: {}",
                pair[0].mean_position, pair[0].tag, pair[1].tag, how
            ));
        }
    }
    Prioritisation { ranking, trace }
}
