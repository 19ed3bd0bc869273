use serde::Serialize;

use super::text::class_json_value;
use crate::classifier::{ClassificationRecord, LeafCensus, RegimeDescriptor, TableRow};
use crate::ct_arith::TightCountResult;
use crate::surface::ClassKey;

#[derive(Serialize)]
struct CsvRow<'a> {
    canonical_code: String,
    surface: &'a str,
    #[serde(rename = "V")]
    vertices: usize,
    #[serde(rename = "E")]
    edges: usize,
    slope_p: u64,
    slope_q: u64,
    tight_count: String,
    mixed_finite: String,
    mixed_rank: u32,
    ot_finite: String,
    ot_rank: u32,
    leaves_3: usize,
    leaves_2: usize,
    leaves_1: usize,
}

fn finish(writer: csv::Writer<Vec<u8>>) -> String {
    let bytes = writer.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

/// CSV table; a tree class reports slope `0,0`.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        writer
            .write_record([
                "canonical_code",
                "surface",
                "V",
                "E",
                "slope_p",
                "slope_q",
                "tight_count",
                "mixed_finite",
                "mixed_rank",
                "ot_finite",
                "ot_rank",
                "leaves_3",
                "leaves_2",
                "leaves_1",
            ])
            .expect("in-memory write");
    }
    for row in rows {
        let rec = &row.record;
        let d = &rec.dividing_set;
        let (slope_p, slope_q) = d.slope.map_or((0, 0), |s| (s.p, s.q));
        writer
            .serialize(CsvRow {
                canonical_code: row.key.to_string(),
                surface: d.surface.name(),
                vertices: d.graph.vertex_count(),
                edges: d.graph.edge_count(),
                slope_p,
                slope_q,
                tight_count: rec.tight.finite_factor.to_string(),
                mixed_finite: rec.mixed.finite_factor.to_string(),
                mixed_rank: rec.mixed.free_rank,
                ot_finite: rec.fully_overtwisted.finite_factor.to_string(),
                ot_rank: rec.fully_overtwisted.free_rank,
                leaves_3: row.census.leaves_dim3,
                leaves_2: row.census.leaves_dim2,
                leaves_1: row.census.leaves_dim1,
            })
            .expect("in-memory write");
    }
    finish(writer)
}

#[derive(Serialize)]
struct RecordJson<'a> {
    canonical_code: String,
    manifold: &'a str,
    dividing_set: serde_json::Value,
    tight: &'a RegimeDescriptor,
    mixed: &'a RegimeDescriptor,
    fully_overtwisted: &'a RegimeDescriptor,
    tight_count_detail: &'a Option<TightCountResult>,
    census: &'a LeafCensus,
}

pub fn record_json(key: &ClassKey, record: &ClassificationRecord, census: &LeafCensus) -> String {
    serde_json::to_string(&RecordJson {
        canonical_code: key.to_string(),
        manifold: record.manifold.name(),
        dividing_set: class_json_value(&record.dividing_set),
        tight: &record.tight,
        mixed: &record.mixed,
        fully_overtwisted: &record.fully_overtwisted,
        tight_count_detail: &record.tight_count_detail,
        census,
    })
    .expect("plain data serialises")
}

/// One JSON object per line.
pub fn table_jsonl(rows: &[TableRow]) -> String {
    rows.iter().map(|r| record_json(&r.key, &r.record, &r.census) + "\n").collect()
}

/// Enumeration summary: curve count, class key, admissibility.
pub fn summary_csv(items: &[(ClassKey, usize, bool)]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["size", "canonical_code", "admissible"]).expect("in-memory write");
    for (key, size, admissible) in items {
        writer.write_record([size.to_string(), key.to_string(), admissible.to_string()]).expect("in-memory write");
    }
    finish(writer)
}

pub fn tight_count_json(t: &TightCountResult) -> String {
    serde_json::to_string(t).expect("plain data serialises")
}
