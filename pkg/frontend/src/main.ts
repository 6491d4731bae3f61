/**
 * Browser entry point: thin DOM glue over the controller and renderers.
 * All logic worth testing lives in controller.ts / render.ts.
 */

import { ExplorerClient, httpTransport } from "./api.js";
import { SessionController } from "./controller.js";
import {
  renderCandidateTable,
  renderHistory,
  renderJobPanel,
  renderKnownPanel,
} from "./render.js";

function $(selector: string): HTMLElement {
  const el = document.querySelector(selector);
  if (el === null) throw new Error(`missing element ${selector}`);
  return el as HTMLElement;
}

function parseNumberList(text: string): number[] {
  return text
    .split(",")
    .map((t) => t.trim())
    .filter((t) => t.length > 0)
    .map((t) => {
      const v = Number(t);
      if (Number.isNaN(v)) throw new Error(`not a number: ${t}`);
      return v;
    });
}

export function mount(baseUrl: string): void {
  const client = new ExplorerClient(httpTransport(baseUrl));
  const controller = new SessionController(client);

  const redraw = () => {
    const { session, table, job, lastError } = controller.state;
    if (session !== null) {
      $("#known").innerHTML = renderKnownPanel(session.n, session.m, session.known);
      $("#history").innerHTML = renderHistory(session);
    }
    if (table !== null) {
      $("#table").innerHTML = renderCandidateTable(table);
    }
    $("#job").innerHTML = job === null ? "" : renderJobPanel(job);
    $("#error").textContent = lastError ?? "";
  };

  const run = (work: Promise<unknown>) => {
    work.catch(() => undefined).finally(redraw);
  };

  $("#create").addEventListener("click", () => {
    const n = Number(($("#n") as HTMLInputElement).value);
    const m = Number(($("#m") as HTMLInputElement).value);
    const known = parseNumberList(($("#known-input") as HTMLInputElement).value);
    run(controller.start(n, m, known));
  });

  $("#extend").addEventListener("click", () => {
    const values = parseNumberList(($("#values-input") as HTMLInputElement).value);
    run(controller.addValues(values));
  });

  $("#pentagon-motif").addEventListener("click", () => {
    run(controller.addMotif("cycle-in-complement", 5));
  });
  $("#quadrangle-motif").addEventListener("click", () => {
    run(controller.addMotif("cycle-in-complement", 4));
  });

  $("#table").addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const row = controller.state.table?.rows.find(
      (r) => String(r.p) === target.dataset.p && String(r.x) === target.dataset.x,
    );
    if (row === undefined) return;
    if (target.classList.contains("adopt")) {
      const copies = Number(
        window.prompt(`copies of x=${row.display.x} to adopt (max ${row.p})`, "1"),
      );
      if (Number.isInteger(copies) && copies > 0 && controller.canAdopt(copies)) {
        run(controller.adopt(row, copies, 0));
      }
    } else if (target.classList.contains("realize")) {
      const complementCycles = (
        $("#complement-cycles") as HTMLInputElement
      ).checked;
      run(controller.realize(row, { complement_cycles: complementCycles }));
      const timer = window.setInterval(redraw, 200);
      window.setTimeout(() => window.clearInterval(timer), 600_000);
    }
  });

  $("#history").addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.classList.contains("branch")) {
      run(controller.branchFrom(Number(target.dataset.index)));
    }
  });
}
