/**
 * Pure HTML renderers.  The UI does no numeric work: every number shown is
 * either a service-provided display string or the verbatim JSON value; the
 * only extra touch is a symbolic label (with the original figure as the
 * tooltip) for the well-known exact constants.
 */

import type {
  CandidateRow,
  CandidateTable,
  JobBody,
  KnownFamily,
  SessionBody,
} from "./api.js";
import { symbolFor } from "./symbols.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** A display string, optionally dressed with its symbolic name. */
function cell(value: number, display: string): string {
  const symbol = symbolFor(value);
  if (symbol === null) return escapeHtml(display);
  return `<span class="symbolic" title="${escapeHtml(display)}">${escapeHtml(symbol)}</span>`;
}

export function renderCandidateTable(table: CandidateTable): string {
  if (table.rows.length === 0) {
    return `<p class="empty-table">No completions exist for this family.</p>`;
  }
  const body = table.rows
    .map((row) => renderCandidateRow(row))
    .join("\n");
  return [
    `<table class="candidates">`,
    `<thead><tr><th>p</th><th>q</th><th>x</th><th>y</th><th>E</th>` +
      `<th>third/6</th><th>test</th><th></th></tr></thead>`,
    `<tbody>`,
    body,
    `</tbody>`,
    `</table>`,
  ].join("\n");
}

export function renderCandidateRow(row: CandidateRow): string {
  const cls = row.passes_moment_test ? "pass-row" : "fail-row";
  const mark = row.passes_moment_test ? "+" : "−";
  const flags = [
    row.sign_split
      ? ""
      : `<span class="flag one-sided" title="x and y share a sign">one-sided</span>`,
    row.coincident
      ? `<span class="flag coincident" title="double root: x equals y">x=y</span>`
      : "",
  ].join("");
  const adopt =
    `<button class="adopt" data-p="${row.p}" data-x="${row.x}">adopt…</button>` +
    `<button class="realize" data-p="${row.p}" data-x="${row.x}">realize</button>`;
  return (
    `<tr class="${cls}" data-p="${row.p}" data-x="${row.x}">` +
    `<td>${row.p}</td><td>${row.q}</td>` +
    `<td>${cell(row.x, row.display.x)}</td>` +
    `<td>${cell(row.y, row.display.y)}</td>` +
    `<td>${escapeHtml(row.display.energy)}</td>` +
    `<td>${escapeHtml(row.display.third_moment_over_6)}</td>` +
    `<td class="mark">${mark}${flags}</td>` +
    `<td>${adopt}</td>` +
    `</tr>`
  );
}

export function renderKnownPanel(n: number, m: number, known: KnownFamily): string {
  const values = known.values
    .map((v) => `<span class="chip">${cell(v, String(v))}</span>`)
    .join(" ");
  return [
    `<div class="known-panel">`,
    `<p>n = ${n}, m = ${m}</p>`,
    `<p class="family">fixed eigenvalues: ${values || "<em>none</em>"}</p>`,
    `<p class="constants">C+ = ${String(known.c_plus)}, C− = ${String(known.c_minus)}, ` +
      `C = ${String(known.c)}, D = ${String(known.d)}</p>`,
    `</div>`,
  ].join("\n");
}

export function renderHistory(session: SessionBody): string {
  const items = session.history
    .map(
      (snap, index) =>
        `<li data-index="${index}">` +
        `<span class="step">${index}</span> ` +
        `<span class="provenance">${escapeHtml(snap.provenance)}</span> ` +
        `<span class="size">|K| = ${snap.values.length}</span> ` +
        `<button class="branch" data-index="${index}">branch from here</button>` +
        `</li>`,
    )
    .join("\n");
  return `<ol class="history">\n${items}\n</ol>`;
}

export function renderJobPanel(job: JobBody): string {
  const header = `<div class="job" data-status="${job.status}">`;
  const footer = `</div>`;
  if (job.status === "queued" || job.status === "running") {
    return [
      header,
      `<p class="spinner">searching… ${job.progress.graphs_examined} graphs examined</p>`,
      footer,
    ].join("\n");
  }
  if (job.status === "error") {
    return [header, `<p class="error">${escapeHtml(job.error ?? "unknown error")}</p>`, footer].join("\n");
  }
  const result = job.result;
  if (result === null) {
    return [header, `<p class="error">job finished without a result</p>`, footer].join("\n");
  }
  if (result.found.length > 0) {
    const found = result.found
      .map((f) => {
        const groups = f.groups
          .map(([v, mult]) => {
            const sym = symbolFor(v);
            const label = sym === null ? String(v) : sym;
            return mult > 1 ? `${label}^${mult}` : label;
          })
          .join(", ");
        return (
          `<li><code class="graph6">${escapeHtml(f.graph6)}</code> ` +
          `energy ${escapeHtml(f.display.energy)} ` +
          `<span class="groups">spectrum: ${escapeHtml(groups)}</span></li>`
        );
      })
      .join("\n");
    return [header, `<p>realized by:</p>`, `<ul class="found">${found}</ul>`, footer].join("\n");
  }
  if (result.certified_empty) {
    const reasons = result.fast_fail_reasons
      .map((r) => `<li>${escapeHtml(r)}</li>`)
      .join("\n");
    return [
      header,
      `<p class="certified">certified non-existent</p>`,
      reasons ? `<ul class="reasons">${reasons}</ul>` : "",
      footer,
    ].join("\n");
  }
  return [
    header,
    `<p class="not-certified">not certified: budget exhausted after ` +
      `${job.progress.graphs_examined} graphs</p>`,
    footer,
  ].join("\n");
}
