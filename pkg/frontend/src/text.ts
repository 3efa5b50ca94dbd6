import type { ViewResponse } from './api.js'

interface PlannedMark {
  begin: number
  end: number
  nodeIds: string[]
}

/**
 * Spans to mark in one document. Identical ranges from several nodes are
 * merged; an overlapping later span is dropped so the text stays linear.
 * Offsets are codepoint offsets, hence the Array.from slicing below.
 */
export function planMarks(view: ViewResponse, docId: string): PlannedMark[] {
  const byRange = new Map<string, PlannedMark>()
  for (const node of view.nodes) {
    for (const span of node.spans) {
      if (span.doc !== docId) continue
      const key = `${span.begin}:${span.end}`
      const found = byRange.get(key)
      if (found) found.nodeIds.push(node.id)
      else byRange.set(key, { begin: span.begin, end: span.end, nodeIds: [node.id] })
    }
  }
  const ordered = [...byRange.values()].sort((a, b) => a.begin - b.begin || a.end - b.end)
  const kept: PlannedMark[] = []
  for (const mark of ordered) {
    const last = kept[kept.length - 1]
    if (last && mark.begin < last.end) continue
    kept.push(mark)
  }
  return kept
}

export function renderTextPane(
  el: HTMLElement,
  docs: Map<string, string>,
  view: ViewResponse | null,
  onMarkClick: (nodeId: string) => void,
): void {
  el.innerHTML = ''
  if (view === null || docs.size === 0) {
    const empty = document.createElement('div')
    empty.className = 'empty-state'
    empty.textContent = 'No source documents in this view.'
    el.appendChild(empty)
    return
  }
  const sorted = [...docs.entries()].sort(([a], [b]) => a.localeCompare(b))
  for (const [docId, text] of sorted) {
    const article = document.createElement('article')
    article.className = 'doc'
    article.dataset.docId = docId
    const heading = document.createElement('h3')
    heading.textContent = docId
    article.appendChild(heading)

    const body = document.createElement('p')
    body.className = 'doc-body'
    const cps = Array.from(text)
    let cursor = 0
    for (const mark of planMarks(view, docId)) {
      if (mark.begin > cursor) body.append(cps.slice(cursor, mark.begin).join(''))
      const m = document.createElement('mark')
      m.textContent = cps.slice(mark.begin, mark.end).join('')
      m.dataset.nodeIds = mark.nodeIds.join(' ')
      m.addEventListener('click', () => onMarkClick(mark.nodeIds[0]))
      body.appendChild(m)
      cursor = mark.end
    }
    if (cursor < cps.length) body.append(cps.slice(cursor).join(''))
    article.appendChild(body)
    el.appendChild(article)
  }
}

export function highlightNodeSpans(el: HTMLElement, nodeId: string | null): void {
  let first: HTMLElement | null = null
  el.querySelectorAll('mark').forEach(mark => {
    const ids = (mark.dataset.nodeIds ?? '').split(' ')
    const on = nodeId !== null && ids.includes(nodeId)
    mark.classList.toggle('highlight', on)
    if (on && first === null) first = mark
  })
  if (first !== null) {
    try {
      ;(first as HTMLElement).scrollIntoView({ block: 'nearest' })
    } catch {
      // headless DOM without layout
    }
  }
}
