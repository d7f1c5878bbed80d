import { ApiClient, ApiError } from "./api.js";
import { OpBatcher, type BatcherOptions } from "./batch.js";
import { diffSelection, verticesInRect, type Rect } from "./geometry.js";
import { ForceLayout } from "./layout.js";
import { ViewState } from "./state.js";
import type { Pattern } from "./types.js";

/** DOM-free explorer logic: upload, layout, rectangle selection with
 * batched incremental updates, and pattern coloring. The browser entry point
 * and the end-to-end tests both drive this class. */
export class ExplorerController {
  readonly state = new ViewState();
  private batcher: OpBatcher;
  private listeners: Array<() => void> = [];

  constructor(private api: ApiClient, batcherOptions?: BatcherOptions) {
    this.batcher = new OpBatcher(
      (ops, seq) => {
        if (!this.state.sessionId) throw new Error("no session");
        return this.api.sendSelectionOps(this.state.sessionId, ops, seq);
      },
      (response, seq) => {
        this.state.retryPending = false;
        if (this.state.applySelectionResponse(response, seq)) this.notify();
      },
      (error, dropped) => {
        this.state.retryPending = !dropped;
        this.state.error = error instanceof Error ? error.message : String(error);
        this.notify();
      },
      batcherOptions,
    );
  }

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  get retryPending(): boolean {
    return this.batcher.retryPending;
  }

  /** Upload an edge-list file body; populates graph, counts and GFD panels.
   * Server-side parse errors (400/413) land in state.error with the line. */
  async loadGraphText(text: string): Promise<void> {
    try {
      const upload = await this.api.uploadGraph(text);
      this.state.applyUpload(upload);
      const gfd = await this.api.getGfd(upload.id, 4, "connected");
      this.state.gfdGlobal = gfd.values;
      this.notify();
    } catch (error) {
      if (error instanceof ApiError) {
        const line = error.detail?.line;
        this.state.error = line != null
          ? `${error.message} (line ${line})`
          : error.message;
      } else {
        this.state.error = error instanceof Error ? error.message : String(error);
      }
      this.notify();
      throw error;
    }
  }

  /** Deterministic force layout over the uploaded graph. */
  runLayout(width: number, height: number, iterations = 120, seed = 42): void {
    const layout = new ForceLayout(this.state.nodes, this.state.edges,
      { width, height, seed });
    layout.run(iterations);
    this.state.positions = layout.positions;
    this.notify();
  }

  /** Select exactly the vertices whose positions fall inside the rectangle;
   * emits the add/remove diff against the currently intended selection. */
  dragSelect(rect: Rect): void {
    this.selectVertices(verticesInRect(this.state.positions, rect));
  }

  selectVertices(target: Set<number>): void {
    const { add, remove } = diffSelection(this.state.intended, target);
    for (const vertex of add) this.batcher.enqueue("add_vertex", vertex);
    for (const vertex of remove) this.batcher.enqueue("remove_vertex", vertex);
    this.state.intended = target;
    if (add.length || remove.length) this.notify();
  }

  /** Fetch per-edge weights for a pattern and activate the color scale. */
  async colorByPattern(pattern: Pattern): Promise<void> {
    if (!this.state.sessionId) return;
    const response = await this.api.getEdgeWeights(this.state.sessionId, pattern);
    this.state.pattern = pattern;
    this.state.edgeWeights = response.weights;
    this.notify();
  }

  /** Wait until every queued op batch is acknowledged. */
  settle(): Promise<void> {
    return this.batcher.settle();
  }

  /** Server-side recomputation of the displayed selection counts. */
  async auditSelection(): Promise<boolean> {
    if (!this.state.sessionId) return false;
    const result = await this.api.audit(this.state.sessionId);
    return result.consistent;
  }
}
