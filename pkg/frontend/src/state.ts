import type { Mode } from './api.js'

// beyond this the view degenerates to the whole graph for realistic data
export const MAX_DEPTH = 5

export type Tab = 'graph' | 'table' | 'text'

export interface UiState {
  sessionId: string | null
  mode: Mode
  selectedSeeds: Set<string>
  depth: number
  lang: string
  activeTab: Tab
  hoveredNode: string | null
}

type Listener = (state: UiState) => void

const RTL_LANGS = new Set(['ar', 'fa', 'he', 'ur'])

export function textDirection(lang: string): 'ltr' | 'rtl' {
  const primary = lang.toLowerCase().split('-')[0]
  return RTL_LANGS.has(primary) ? 'rtl' : 'ltr'
}

export class UiStore {
  private state: UiState = {
    sessionId: null,
    mode: 'individual',
    selectedSeeds: new Set(),
    depth: 1,
    lang: 'en',
    activeTab: 'graph',
    hoveredNode: null,
  }
  private listeners: Listener[] = []

  get snapshot(): UiState {
    return { ...this.state, selectedSeeds: new Set(this.state.selectedSeeds) }
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn)
    return () => {
      this.listeners = this.listeners.filter(l => l !== fn)
    }
  }

  private commit(patch: Partial<UiState>) {
    this.state = { ...this.state, ...patch }
    const snapshot = this.snapshot
    for (const fn of this.listeners) fn(snapshot)
  }

  setSession(id: string) {
    this.commit({ sessionId: id, selectedSeeds: new Set(), hoveredNode: null })
  }

  /** Switching mode discards the previous selection. */
  setMode(mode: Mode) {
    if (mode === this.state.mode) return
    this.commit({ mode, selectedSeeds: new Set() })
  }

  toggleSeed(id: string) {
    const seeds = new Set(this.state.selectedSeeds)
    if (seeds.has(id)) seeds.delete(id)
    else seeds.add(id)
    this.commit({ selectedSeeds: seeds })
  }

  replaceSeeds(mode: Mode, ids: string[]) {
    this.commit({ mode, selectedSeeds: new Set(ids) })
  }

  setDepth(depth: number) {
    const d = Math.min(MAX_DEPTH, Math.max(0, Math.trunc(depth)))
    if (d !== this.state.depth) this.commit({ depth: d })
  }

  setLang(lang: string) {
    if (lang !== this.state.lang) this.commit({ lang })
  }

  setTab(tab: Tab) {
    if (tab !== this.state.activeTab) this.commit({ activeTab: tab })
  }

  setHovered(node: string | null) {
    if (node !== this.state.hoveredNode) this.commit({ hoveredNode: node })
  }
}
