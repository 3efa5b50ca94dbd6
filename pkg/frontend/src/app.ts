import {
  ApiClient,
  ApiError,
  type FacetsResponse,
  type Mode,
  type TableRow,
  type ViewParams,
  type ViewResponse,
} from './api.js'
import { MAX_DEPTH, UiStore, textDirection, type Tab, type UiState } from './state.js'
import { renderFacetPanel } from './facets.js'
import { attachServerSvg, markHoveredNode, renderGraph, type GraphCallbacks } from './graph.js'
import { createTooltip, type TooltipHandle } from './tooltip.js'
import { highlightNodeSpans, renderTextPane } from './text.js'
import { renderTablePane, type Column, type TableSort } from './table.js'

const LAYOUT = 'hierarchical'

/**
 * Wires the store, the API client, and the panes together. The app never
 * derives nodes, edges, or table rows itself; everything displayed comes
 * from a server response. At most one view request is live: every request
 * takes a token and a response whose token is stale gets dropped.
 */
export class App {
  readonly store = new UiStore()

  private root!: HTMLElement
  private appEl!: HTMLElement
  private banner!: HTMLElement
  private facetPanel!: HTMLElement
  private graphPane!: HTMLElement
  private tablePane!: HTMLElement
  private textPane!: HTMLElement
  private langSelect!: HTMLSelectElement
  private depthSlider!: HTMLInputElement
  private depthValue!: HTMLElement
  private tooltip!: TooltipHandle

  private facets: FacetsResponse | null = null
  private view: ViewResponse | null = null
  private tableRows: TableRow[] | null = null
  private tableSort: TableSort = { by: 'subject', ascending: true }
  private docs = new Map<string, string>()

  private requestSeq = 0
  private rendererAvailable = true
  private tasks = new Set<Promise<unknown>>()
  private facetsKey = ''

  constructor(private api: ApiClient) {}

  mount(root: HTMLElement): void {
    this.root = root
    root.innerHTML = `
      <div class="app" dir="ltr">
        <header>
          <h1>kg-atlas</h1>
          <label class="lang-control">Language
            <select class="lang-select"></select>
          </label>
          <fieldset class="mode-toggle">
            <label><input type="radio" name="mode" value="concept"> Concepts</label>
            <label><input type="radio" name="mode" value="individual" checked> Individuals</label>
          </fieldset>
          <label class="depth-control">Depth
            <input type="range" class="depth-slider" min="0" max="${MAX_DEPTH}" step="1" value="1">
            <output class="depth-value">1</output>
          </label>
          <nav class="tabs">
            <button data-tab="graph" aria-selected="true">Graph</button>
            <button data-tab="table" aria-selected="false">Table</button>
            <button data-tab="text" aria-selected="false">Text</button>
          </nav>
        </header>
        <div class="banner" hidden></div>
        <div class="content">
          <aside class="facet-panel"></aside>
          <main>
            <section class="pane graph-pane"></section>
            <section class="pane table-pane" hidden></section>
            <section class="pane text-pane" hidden></section>
          </main>
        </div>
      </div>`

    this.appEl = root.querySelector<HTMLElement>('.app')!
    this.banner = root.querySelector<HTMLElement>('.banner')!
    this.facetPanel = root.querySelector<HTMLElement>('.facet-panel')!
    this.graphPane = root.querySelector<HTMLElement>('.graph-pane')!
    this.tablePane = root.querySelector<HTMLElement>('.table-pane')!
    this.textPane = root.querySelector<HTMLElement>('.text-pane')!
    this.langSelect = root.querySelector<HTMLSelectElement>('.lang-select')!
    this.depthSlider = root.querySelector<HTMLInputElement>('.depth-slider')!
    this.depthValue = root.querySelector<HTMLElement>('.depth-value')!
    this.tooltip = createTooltip(this.appEl)

    this.langSelect.addEventListener('change', () => {
      this.store.setLang(this.langSelect.value)
      this.track(this.refreshFacets())
      this.track(this.requestView())
    })
    this.root.querySelectorAll<HTMLInputElement>('input[name="mode"]').forEach(radio => {
      radio.addEventListener('change', () => {
        if (!radio.checked) return
        this.store.setMode(radio.value as Mode)
        this.track(this.requestView())
      })
    })
    this.depthSlider.addEventListener('input', () => {
      const before = this.store.snapshot.depth
      this.store.setDepth(Number(this.depthSlider.value))
      if (this.store.snapshot.depth !== before) this.track(this.requestView())
    })
    this.root.querySelectorAll<HTMLButtonElement>('.tabs button').forEach(button => {
      button.addEventListener('click', () => {
        this.store.setTab(button.dataset.tab as Tab)
        if (button.dataset.tab === 'table' && this.view !== null && this.tableRows === null) {
          this.track(this.fetchTable(this.requestSeq))
        }
      })
    })

    this.store.subscribe(s => this.syncChrome(s))
    this.syncChrome(this.store.snapshot)
    this.renderPanes()
  }

  async start(sessionId: string): Promise<void> {
    this.store.setSession(sessionId)
    await this.track(this.initSession())
  }

  /** Test hook: resolves once every in-flight request has settled. */
  async idle(): Promise<void> {
    while (this.tasks.size > 0) await Promise.allSettled([...this.tasks])
  }

  private track<T>(p: Promise<T>): Promise<T> {
    this.tasks.add(p)
    void p.finally(() => this.tasks.delete(p)).catch(() => undefined)
    return p
  }

  private async initSession(): Promise<void> {
    try {
      const langs = await this.api.getLanguages()
      this.langSelect.innerHTML = ''
      for (const lang of langs) {
        const option = document.createElement('option')
        option.value = lang
        option.textContent = lang
        this.langSelect.appendChild(option)
      }
      this.langSelect.value = this.store.snapshot.lang
    } catch (err) {
      this.showError(err)
      return
    }
    await this.refreshFacets()
  }

  private async refreshFacets(): Promise<void> {
    const s = this.store.snapshot
    if (s.sessionId === null) return
    try {
      this.facets = await this.api.getFacets(s.sessionId, s.lang)
      this.facetsKey = ''
      this.syncChrome(this.store.snapshot)
      this.clearBanner()
    } catch (err) {
      this.showError(err)
    }
  }

  private async requestView(): Promise<void> {
    const s = this.store.snapshot
    const token = ++this.requestSeq
    if (s.sessionId === null || s.selectedSeeds.size === 0) {
      this.view = null
      this.tableRows = null
      this.docs.clear()
      this.renderPanes()
      return
    }
    const params: ViewParams = {
      mode: s.mode,
      seeds: [...s.selectedSeeds],
      depth: s.depth,
      lang: s.lang,
    }
    try {
      const view = await this.api.getView(s.sessionId, params)
      if (token !== this.requestSeq) return
      this.view = view
      this.tableRows = null
      await this.loadDocuments(s.sessionId, view)
      if (token !== this.requestSeq) return
      this.renderPanes()
      this.clearBanner()
      this.track(this.upgradeToServerSvg(s.sessionId, params, token))
      if (this.store.snapshot.activeTab === 'table') await this.fetchTable(token)
    } catch (err) {
      if (token === this.requestSeq) this.showError(err)
    }
  }

  private async loadDocuments(sessionId: string, view: ViewResponse): Promise<void> {
    const wanted = new Set<string>()
    for (const node of view.nodes) for (const span of node.spans) wanted.add(span.doc)
    for (const docId of [...wanted].sort()) {
      if (this.docs.has(docId)) continue
      try {
        this.docs.set(docId, await this.api.getDocument(sessionId, docId))
      } catch {
        // the session has no such document; spans pointing at it stay unmarked
      }
    }
    for (const key of [...this.docs.keys()]) if (!wanted.has(key)) this.docs.delete(key)
  }

  private async upgradeToServerSvg(
    sessionId: string,
    params: ViewParams,
    token: number,
  ): Promise<void> {
    if (!this.rendererAvailable) return
    try {
      const svg = await this.api.getSvg(sessionId, params, LAYOUT)
      if (token !== this.requestSeq || this.view === null) return
      attachServerSvg(this.graphPane, svg, this.view, this.graphCallbacks())
    } catch (err) {
      if (err instanceof ApiError && err.code === 'renderer_unavailable') {
        this.rendererAvailable = false
      }
      // on any failure the client rendering stays up
    }
  }

  private async fetchTable(token: number): Promise<void> {
    const s = this.store.snapshot
    if (s.sessionId === null || this.view === null) return
    const params: ViewParams = {
      mode: s.mode,
      seeds: [...s.selectedSeeds],
      depth: s.depth,
      lang: s.lang,
    }
    try {
      const table = await this.api.getTable(s.sessionId, params)
      if (token !== this.requestSeq) return
      this.tableRows = table.rows
      this.renderTable()
    } catch (err) {
      if (token === this.requestSeq) this.showError(err)
    }
  }

  private graphCallbacks(): GraphCallbacks {
    return {
      onHover: (node, x, y) => {
        if (node === null) {
          this.tooltip.hide()
          this.store.setHovered(null)
        } else {
          this.tooltip.show(node, x, y)
          this.store.setHovered(node.id)
        }
      },
      onSelect: node => {
        this.store.replaceSeeds('individual', [node.id])
        this.track(this.requestView())
      },
    }
  }

  private onToggleFacet(kind: Mode, id: string): void {
    const s = this.store.snapshot
    if (kind !== s.mode) this.store.replaceSeeds(kind, [id])
    else this.store.toggleSeed(id)
    this.track(this.requestView())
  }

  private renderPanes(): void {
    if (this.view === null) {
      this.graphPane.innerHTML = ''
      const empty = document.createElement('div')
      empty.className = 'empty-state'
      empty.textContent = 'Select a concept or an individual to explore.'
      this.graphPane.appendChild(empty)
    } else {
      renderGraph(this.graphPane, this.view, this.graphCallbacks())
    }
    this.renderTable()
    renderTextPane(this.textPane, this.docs, this.view, id => this.store.setHovered(id))
  }

  private renderTable(): void {
    renderTablePane(this.tablePane, this.tableRows, this.tableSort, col => this.onSort(col))
  }

  private onSort(column: Column): void {
    this.tableSort =
      this.tableSort.by === column
        ? { by: column, ascending: !this.tableSort.ascending }
        : { by: column, ascending: true }
    this.renderTable()
  }

  private syncChrome(s: UiState): void {
    this.appEl.dir = textDirection(s.lang)
    this.depthSlider.value = String(s.depth)
    this.depthValue.textContent = String(s.depth)
    if (this.langSelect.options.length > 0) this.langSelect.value = s.lang
    this.root.querySelectorAll<HTMLInputElement>('input[name="mode"]').forEach(radio => {
      radio.checked = radio.value === s.mode
    })
    this.root.querySelectorAll<HTMLButtonElement>('.tabs button').forEach(button => {
      button.setAttribute('aria-selected', String(button.dataset.tab === s.activeTab))
    })
    this.graphPane.hidden = s.activeTab !== 'graph'
    this.tablePane.hidden = s.activeTab !== 'table'
    this.textPane.hidden = s.activeTab !== 'text'

    const facetsKey = [
      s.mode,
      [...s.selectedSeeds].sort().join(','),
      s.lang,
      String(this.facets === null),
    ].join('|')
    if (facetsKey !== this.facetsKey) {
      this.facetsKey = facetsKey
      renderFacetPanel(this.facetPanel, this.facets, s, (kind, id) => this.onToggleFacet(kind, id))
    }

    markHoveredNode(this.graphPane, s.hoveredNode)
    highlightNodeSpans(this.textPane, s.hoveredNode)
  }

  private showError(err: unknown): void {
    const text = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err)
    this.banner.innerHTML = ''
    const message = document.createElement('span')
    message.textContent = text
    const retry = document.createElement('button')
    retry.className = 'retry'
    retry.textContent = 'Retry'
    retry.addEventListener('click', () => {
      this.track(this.refreshFacets())
      this.track(this.requestView())
    })
    this.banner.append(message, retry)
    this.banner.hidden = false
  }

  private clearBanner(): void {
    this.banner.hidden = true
    this.banner.innerHTML = ''
  }
}
