use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub results: Vec<Value>,
    pub warnings: Vec<String>,
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, input: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            results: Vec::new(),
            warnings: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, row: impl Serialize) {
        self.results.push(serde_json::to_value(row).expect("result rows serialize"));
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    /// Text for stdout. Warnings go to stderr in `tsv` mode so that
    /// stdout stays a clean table.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let (header, rows) = self.table();
                let mut s = header.join("\t");
                s.push('\n');
                for row in rows {
                    s.push_str(&row.join("\t"));
                    s.push('\n');
                }
                s
            }
            Format::Pretty => self.pretty(),
        }
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let mut header: Vec<String> = Vec::new();
        for row in &self.results {
            match row {
                Value::Object(map) => {
                    for k in map.keys() {
                        if !header.contains(k) {
                            header.push(k.clone());
                        }
                    }
                }
                _ if !header.iter().any(|h| h == "value") => header.push("value".into()),
                _ => {}
            }
        }
        let rows = self
            .results
            .iter()
            .map(|row| {
                header
                    .iter()
                    .map(|k| match row {
                        Value::Object(map) => map.get(k).map(cell).unwrap_or_default(),
                        other if k == "value" => cell(other),
                        _ => String::new(),
                    })
                    .collect()
            })
            .collect();
        (header, rows)
    }

    fn pretty(&self) -> String {
        let mut s = format!("symdef {}", self.command);
        if let Some(sweep) = self.input.get("sweep").and_then(Value::as_str) {
            s.push_str(&format!(" {sweep}"));
        }
        if let Some(id) = self.input.pointer("/graph/id").and_then(Value::as_str) {
            s.push_str(&format!(" on {id}"));
        }
        s.push('\n');
        let (header, rows) = self.table();
        if !header.is_empty() {
            let widths: Vec<usize> = (0..header.len())
                .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                format!("  {}\n", padded.join("  ").trim_end())
            };
            s.push_str(&line(&header));
            for r in &rows {
                s.push_str(&line(r));
            }
        }
        for w in &self.warnings {
            s.push_str(&format!("warning: {w}\n"));
        }
        if let Some(ms) = self.timing_ms {
            s.push_str(&format!("time: {ms} ms\n"));
        }
        s
    }
}

fn cell(v: &Value) -> String {
    let raw = match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let sep = if items.iter().all(Value::is_number) { "," } else { "; " };
            items.iter().map(cell).collect::<Vec<_>>().join(sep)
        }
        other => other.to_string(),
    };
    raw.replace(['\t', '\n'], " ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("sdefect", json!({"graph": {"id": "K3"}}));
        r.push(json!({"m": 1, "sdefect": 0, "witnesses": ["x1", "x2"]}));
        r.push(json!({"m": 2, "sdefect": 1, "note": null}));
        r.warn("careful");
        r
    }

    #[test]
    fn json_keeps_schema_order() {
        let s = sample().render(Format::Json);
        let keys = ["\"command\"", "\"input\"", "\"results\"", "\"warnings\"", "\"timing_ms\""];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
        assert!(s.contains("\"timing_ms\": null"));
    }

    #[test]
    fn tsv_is_header_then_rows() {
        let s = sample().render(Format::Tsv);
        assert_eq!(s, "m\tsdefect\twitnesses\tnote\n1\t0\tx1; x2\t\n2\t1\t\t\n");
    }

    #[test]
    fn pretty_aligns_and_lists_warnings() {
        let s = sample().render(Format::Pretty);
        assert!(s.starts_with("symdef sdefect on K3\n"));
        assert!(s.contains("  m  sdefect  witnesses  note\n"));
        assert!(s.ends_with("warning: careful\n"));
    }
}
