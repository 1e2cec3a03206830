import { ApiClient, ApiError } from "./api.js";
import { renderBars } from "./bars.js";
import { ConsistencyGauge } from "./gauge.js";
import { SCALE_VALUES, parseRatio, scaleLabel, trimmed } from "./scale.js";
import type { JudgmentFeedback, SessionView, ViolationView } from "./types.js";

// Upper-triangle judgment entry for one expert. Every edit sends
// exactly one PUT; everything painted afterwards (reciprocal cell,
// gauges, priorities, violation highlights) comes out of that
// response. Nothing numeric is derived in the browser.

export class JudgmentGrid {
  private matrix: (number | null)[][];
  private version: number;
  private advanced = false;
  private gauge: ConsistencyGauge;
  private violations: ViolationView[] = [];
  private weights: number[] | null = null;
  private busy = false;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private session: SessionView,
    private readonly expert: number,
    private readonly onSession?: (s: SessionView) => void,
  ) {
    this.matrix = session.experts[expert].matrix;
    this.version = session.version;
    this.gauge = new ConsistencyGauge(this.ensure("gauge"));
    this.render();
  }

  private ensure(kind: string): HTMLElement {
    let el = this.root.querySelector<HTMLElement>(`[data-part="${kind}"]`);
    if (!el) {
      el = document.createElement("div");
      el.dataset.part = kind;
      this.root.appendChild(el);
    }
    return el;
  }

  private render(): void {
    this.renderTable();
    this.renderStatus();
    this.gauge.render({
      consistency: null,
      mu: null,
    });
    this.renderPriorities();
  }

  private renderTable(): void {
    const table = this.ensure("table");
    const labels = this.session.labels;
    const n = labels.length;
    table.innerHTML = "";

    const toggle = document.createElement("label");
    toggle.className = "advanced-toggle";
    const checkbox = document.createElement("input");
    checkbox.type = "checkbox";
    checkbox.checked = this.advanced;
    checkbox.addEventListener("change", () => {
      this.advanced = checkbox.checked;
      this.renderTable();
    });
    toggle.append(checkbox, document.createTextNode(" advanced: type any positive ratio"));
    if (this.session.settings.scale_mode === "free_positive") {
      table.appendChild(toggle);
    }

    const grid = document.createElement("table");
    grid.className = "judgment-grid";
    const head = grid.insertRow();
    head.insertCell();
    for (const label of labels) {
      const th = document.createElement("th");
      th.textContent = label;
      head.appendChild(th);
    }

    for (let i = 0; i < n; i++) {
      const row = grid.insertRow();
      const th = document.createElement("th");
      th.textContent = labels[i];
      row.appendChild(th);
      for (let j = 0; j < n; j++) {
        const cell = row.insertCell();
        cell.dataset.cell = `${i}-${j}`;
        if (i === j) {
          cell.className = "cell-diagonal";
          cell.textContent = "1";
        } else if (i < j) {
          cell.className = "cell-entry";
          cell.appendChild(this.entryControl(i, j));
        } else {
          cell.className = "cell-mirror";
          const value = this.matrix[i][j];
          cell.textContent = value === null ? "·" : trimmed(value, 4);
        }
        if (this.isViolating(i, j)) {
          cell.classList.add("cell-violation");
        }
      }
    }
    table.appendChild(grid);
  }

  private entryControl(i: number, j: number): HTMLElement {
    const current = this.matrix[i][j];
    if (this.advanced) {
      const input = document.createElement("input");
      input.type = "text";
      input.className = "cell-input";
      input.value = current === null ? "" : trimmed(current, 6);
      input.placeholder = "e.g. 3 or 2/7";
      input.addEventListener("change", () => {
        const value = parseRatio(input.value);
        if (!Number.isFinite(value) || value <= 0) {
          this.cellError(i, j, "need a positive number");
          return;
        }
        void this.submit(i, j, value);
      });
      return input;
    }
    const select = document.createElement("select");
    select.className = "cell-select";
    const blank = document.createElement("option");
    blank.value = "";
    blank.textContent = "–";
    select.appendChild(blank);
    for (const value of SCALE_VALUES) {
      const option = document.createElement("option");
      option.value = String(value);
      option.textContent = scaleLabel(value);
      if (current !== null && Math.abs(current - value) < 1e-12) {
        option.selected = true;
      }
      select.appendChild(option);
    }
    if (current !== null && !SCALE_VALUES.some((v) => Math.abs(current - v) < 1e-12)) {
      const option = document.createElement("option");
      option.value = String(current);
      option.textContent = trimmed(current, 4);
      option.selected = true;
      select.appendChild(option);
    }
    select.addEventListener("change", () => {
      if (select.value === "") {
        return;
      }
      void this.submit(i, j, Number(select.value));
    });
    return select;
  }

  private isViolating(i: number, j: number): boolean {
    for (const v of this.violations) {
      const pairs = [
        [v.i, v.j],
        [v.j, v.k],
        [v.i, v.k],
      ];
      if (pairs.some(([a, b]) => (a === i && b === j) || (a === j && b === i))) {
        return true;
      }
    }
    return false;
  }

  /** One user edit, one PUT. On a version conflict: refetch, replay once. */
  async submit(i: number, j: number, value: number, replayed = false): Promise<void> {
    if (this.busy) {
      return;
    }
    this.busy = true;
    this.clearCellError(i, j);
    try {
      const feedback = await this.api.putJudgment(
        this.session.id,
        this.expert,
        i,
        j,
        value,
        this.version,
      );
      this.applyFeedback(feedback);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409 && !replayed) {
        const fresh = await this.api.getSession(this.session.id);
        this.session = fresh;
        this.version = fresh.version;
        this.matrix = fresh.experts[this.expert].matrix;
        this.onSession?.(fresh);
        this.busy = false;
        // The edit targets the same still-existing cell, so it stays
        // valid; replay it exactly once against the fresh version.
        return this.submit(i, j, value, true);
      }
      if (error instanceof ApiError) {
        this.cellError(i, j, error.message);
      } else {
        this.cellError(i, j, String(error));
      }
    } finally {
      this.busy = false;
    }
  }

  private applyFeedback(feedback: JudgmentFeedback): void {
    this.version = feedback.version;
    this.matrix = feedback.matrix;
    this.violations = feedback.violations;
    this.weights = feedback.w;
    this.session.version = feedback.version;
    this.session.experts[this.expert].matrix = feedback.matrix;
    this.session.experts[this.expert].judged = feedback.progress.judged;
    this.session.experts[this.expert].complete = feedback.progress.complete;
    this.onSession?.(this.session);

    this.renderTable();
    this.renderStatus(feedback);
    this.gauge.render({ consistency: feedback.consistency, mu: feedback.mu });
    this.renderPriorities();
  }

  private renderStatus(feedback?: JudgmentFeedback): void {
    const status = this.ensure("status");
    const slot = this.session.experts[this.expert];
    const progress = feedback?.progress ?? {
      judged: slot.judged,
      required: slot.required,
      complete: slot.complete,
    };
    const violations = this.violations.length
      ? `worst clash: (${this.violations[0].i},${this.violations[0].j},${this.violations[0].k}) off by ${(
          this.violations[0].relative_deviation * 100
        ).toFixed(0)}%`
      : "no transitivity clashes among judged triples";
    status.innerHTML = `<span class="progress">${progress.judged}/${progress.required} pairs</span> <span class="violation-note">${violations}</span>`;
  }

  private renderPriorities(): void {
    const target = this.ensure("priorities");
    if (!this.weights) {
      target.innerHTML = `<span class="bars-pending">priorities appear once every pair is judged</span>`;
      return;
    }
    renderBars(
      target,
      this.session.labels.map((label, k) => ({ label, value: this.weights![k] })),
      "current priorities",
    );
  }

  private cellError(i: number, j: number, message: string): void {
    const cell = this.root.querySelector<HTMLElement>(`[data-cell="${i}-${j}"]`);
    if (!cell) {
      return;
    }
    cell.classList.add("cell-error");
    let note = cell.querySelector<HTMLElement>(".cell-error-note");
    if (!note) {
      note = document.createElement("div");
      note.className = "cell-error-note";
      cell.appendChild(note);
    }
    note.textContent = message;
  }

  private clearCellError(i: number, j: number): void {
    const cell = this.root.querySelector<HTMLElement>(`[data-cell="${i}-${j}"]`);
    cell?.classList.remove("cell-error");
    cell?.querySelector(".cell-error-note")?.remove();
  }
}
