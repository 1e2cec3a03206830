import { ApiClient, ApiError, matrixToUpper } from "./api.js";
import { renderBars } from "./bars.js";
import { trimmed } from "./scale.js";
import type { GroupResponse, SessionView } from "./types.js";

/**
 * Group view: aggregated priorities plus a what-if slider per expert.
 *
 * Sliders never mutate the stored session. Each drag renormalizes the
 * raw positions to sum to one and re-queries the stateless aggregation
 * endpoint with the session's matrices, so the chart is always a real
 * backend answer, never a local blend.
 */
export class GroupDashboard {
  private raw: number[];
  private latest: GroupResponse | null = null;
  private latestNames: string[] = [];
  private error: string | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private session: SessionView,
  ) {
    this.raw = session.experts.map((e) => e.alpha);
    this.render();
    void this.refresh();
  }

  update(session: SessionView): void {
    const sizeChanged = session.experts.length !== this.raw.length;
    this.session = session;
    if (sizeChanged) {
      this.raw = session.experts.map((e) => e.alpha);
    }
    this.render();
    void this.refresh();
  }

  /** Raw slider positions scaled to sum to 1 over the complete experts. */
  normalizedWeights(): number[] {
    const usable = this.session.experts.map((e, k) => (e.complete ? this.raw[k] : 0));
    const total = usable.reduce((a, b) => a + b, 0);
    if (total <= 0) {
      const m = usable.filter((v, k) => this.session.experts[k].complete).length || 1;
      return usable.map((v, k) => (this.session.experts[k].complete ? 1 / m : 0));
    }
    return usable.map((v) => v / total);
  }

  private async refresh(): Promise<void> {
    // An expert slid to zero drops out of the query entirely; the
    // backend insists every submitted weight is strictly positive.
    const weights = this.normalizedWeights();
    const active = this.session.experts.filter((e) => e.complete && weights[e.index] > 0);
    if (active.length === 0) {
      this.latest = null;
      this.error = null;
      this.renderResults();
      return;
    }
    const matrices = active.map((e) => matrixToUpper(e.matrix, this.session.labels));
    const alphas = active.map((e) => weights[e.index]);
    this.latestNames = active.map((e) => e.name);
    try {
      this.latest = await this.api.group(matrices, alphas);
      this.error = null;
    } catch (err) {
      this.latest = null;
      this.error = err instanceof ApiError ? err.message : String(err);
    }
    this.renderResults();
  }

  private render(): void {
    this.renderSliders();
    this.renderResults();
  }

  private part(kind: string): HTMLElement {
    let el = this.root.querySelector<HTMLElement>(`[data-part="${kind}"]`);
    if (!el) {
      el = document.createElement("div");
      el.dataset.part = kind;
      this.root.appendChild(el);
    }
    return el;
  }

  private renderSliders(): void {
    const host = this.part("sliders");
    host.innerHTML = "";
    const heading = document.createElement("h3");
    heading.textContent = "expert weights (what-if)";
    host.appendChild(heading);

    const weights = this.normalizedWeights();
    this.session.experts.forEach((expert, k) => {
      const row = document.createElement("div");
      row.className = "slider-row";
      row.dataset.expert = String(k);

      const name = document.createElement("span");
      name.className = "slider-name";
      name.textContent = expert.name;

      const slider = document.createElement("input");
      slider.type = "range";
      slider.min = "0";
      slider.max = "100";
      slider.step = "1";
      slider.value = String(Math.round(this.raw[k] * 100));
      slider.disabled = !expert.complete;
      slider.addEventListener("input", () => {
        this.raw[k] = Number(slider.value) / 100;
        this.renderSliders();
        void this.refresh();
      });

      const readout = document.createElement("span");
      readout.className = "slider-weight";
      readout.dataset.weight = String(weights[k]);
      readout.textContent = expert.complete
        ? trimmed(weights[k], 4)
        : `waiting (${expert.judged}/${expert.required} pairs)`;

      row.append(name, slider, readout);
      if (!expert.complete) {
        row.classList.add("slider-disabled");
      }
      host.appendChild(row);
    });

    const note = document.createElement("p");
    note.className = "slider-note";
    note.textContent = "weights renormalize to sum to 1; incomplete experts sit out";
    host.appendChild(note);
  }

  private renderResults(): void {
    const host = this.part("results");
    host.innerHTML = "";
    if (this.error) {
      const banner = document.createElement("div");
      banner.className = "error-banner";
      banner.textContent = this.error;
      host.appendChild(banner);
      return;
    }
    if (!this.latest) {
      const pending = document.createElement("p");
      pending.className = "bars-pending";
      pending.textContent = "group chart appears once at least one expert has judged every pair";
      host.appendChild(pending);
      return;
    }
    const group = this.latest;

    const groupTarget = document.createElement("div");
    groupTarget.dataset.part = "group-bars";
    renderBars(
      groupTarget,
      group.labels.map((label, k) => ({ label, value: group.w[k] })),
      "group priorities",
    );
    host.appendChild(groupTarget);

    const divTarget = document.createElement("div");
    divTarget.dataset.part = "divergence-bars";
    renderBars(
      divTarget,
      group.experts.map((e, k) => ({
        label: this.latestNames[k] ?? `expert ${k + 1}`,
        value: e.divergence,
      })),
      "distance from the group (per expert)",
    );
    host.appendChild(divTarget);

    const footer = document.createElement("p");
    footer.className = "group-footer";
    footer.dataset.equivalent = String(group.equivalent);
    footer.textContent = group.equivalent
      ? "cross-check: pooling judgments and pooling priorities agree"
      : "cross-check failed: the two aggregation routes disagree";
    host.appendChild(footer);
  }
}
