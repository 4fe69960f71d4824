/**
 * Access to the simulation engine. The UI only ever exchanges circuit text
 * for a SimulationReport; how the report is produced (local bridge process,
 * hosted service) is behind this interface.
 */
import { SimulationReport } from "./report.js";
import { DisplayOptions } from "./editor.js";

export interface Simulator {
  simulate(circuitText: string, options: DisplayOptions): Promise<SimulationReport>;
}

/** Talks to the local bridge (tools/bridge.py), which runs the CLI. */
export class HttpSimulator implements Simulator {
  constructor(private readonly endpoint = "/simulate") {}

  async simulate(circuitText: string, options: DisplayOptions): Promise<SimulationReport> {
    const params = new URLSearchParams({
      bars: options.bars,
      decades: String(options.decades),
    });
    if (options.layoutK !== null) params.set("layout", String(options.layoutK));
    const response = await fetch(`${this.endpoint}?${params.toString()}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: circuitText,
    });
    if (!response.ok) {
      throw new Error(await response.text());
    }
    return (await response.json()) as SimulationReport;
  }
}

/**
 * Serializes simulate calls with latest-wins semantics and a debounce for
 * continuous parameter drags: only the newest request's result is delivered.
 */
export class SimulationQueue {
  private counter = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly simulator: Simulator,
    private readonly onReport: (report: SimulationReport) => void,
    private readonly onError: (message: string) => void,
    private readonly debounceMs = 50,
  ) {}

  /** Debounced: used while dragging a gate parameter. */
  request(circuitText: string, options: DisplayOptions): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      this.requestNow(circuitText, options);
    }, this.debounceMs);
  }

  /** Immediate: used for discrete edits. */
  requestNow(circuitText: string, options: DisplayOptions): void {
    const ticket = ++this.counter;
    this.simulator.simulate(circuitText, options).then(
      (report) => {
        if (ticket === this.counter) this.onReport(report);
      },
      (error: unknown) => {
        if (ticket === this.counter) this.onError(String(error));
      },
    );
  }
}
