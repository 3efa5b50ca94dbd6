import { describe, expect, it } from 'vitest'
import type { ViewResponse } from '../src/api.js'
import { textDirection, UiStore } from '../src/state.js'
import { sortRows } from '../src/table.js'
import { planMarks } from '../src/text.js'

function viewWithSpans(spans: { node: string; begin: number; end: number }[]): ViewResponse {
  return {
    nodes: spans.map(s => ({
      id: s.node,
      label: s.node,
      classIri: 'c',
      classLabel: 'C',
      iconKey: 'thing',
      tooltip: [],
      spans: [{ doc: 'd1', begin: s.begin, end: s.end }],
    })),
    edges: [],
    lang: 'en',
    depth: 1,
    seeds: [],
  }
}

describe('planMarks', () => {
  it('spans count codepoints, not UTF-16 units', () => {
    const marks = planMarks(viewWithSpans([{ node: 'n1', begin: 3, end: 5 }]), 'd1')
    expect(marks).toEqual([{ begin: 3, end: 5, nodeIds: ['n1'] }])
    const text = Array.from('ab\u{1f642}cdef')
    expect(text.slice(3, 5).join('')).toBe('cd')
  })

  it('merges identical ranges and drops overlapping ones', () => {
    const marks = planMarks(
      viewWithSpans([
        { node: 'n1', begin: 0, end: 4 },
        { node: 'n2', begin: 0, end: 4 },
        { node: 'n3', begin: 2, end: 6 },
        { node: 'n4', begin: 4, end: 8 },
      ]),
      'd1',
    )
    expect(marks).toEqual([
      { begin: 0, end: 4, nodeIds: ['n1', 'n2'] },
      { begin: 4, end: 8, nodeIds: ['n4'] },
    ])
  })

  it('ignores spans from other documents', () => {
    expect(planMarks(viewWithSpans([{ node: 'n1', begin: 0, end: 2 }]), 'other')).toEqual([])
  })
})

describe('textDirection', () => {
  it('is rtl for right-to-left scripts, including region subtags', () => {
    expect(textDirection('ar')).toBe('rtl')
    expect(textDirection('ar-EG')).toBe('rtl')
    expect(textDirection('he')).toBe('rtl')
  })

  it('is ltr otherwise', () => {
    expect(textDirection('en')).toBe('ltr')
    expect(textDirection('zh')).toBe('ltr')
    expect(textDirection('fr')).toBe('ltr')
  })
})

describe('UiStore', () => {
  it('clamps depth to the slider range', () => {
    const store = new UiStore()
    store.setDepth(99)
    expect(store.snapshot.depth).toBe(5)
    store.setDepth(-3)
    expect(store.snapshot.depth).toBe(0)
  })

  it('switching mode discards the previous selection', () => {
    const store = new UiStore()
    store.toggleSeed('x')
    expect([...store.snapshot.selectedSeeds]).toEqual(['x'])
    store.setMode('concept')
    expect(store.snapshot.selectedSeeds.size).toBe(0)
  })

  it('notifies subscribers and honors unsubscribe', () => {
    const store = new UiStore()
    let seen = 0
    const off = store.subscribe(() => {
      seen += 1
    })
    store.setLang('fr')
    expect(seen).toBe(1)
    off()
    store.setLang('zh')
    expect(seen).toBe(1)
  })
})

describe('sortRows', () => {
  const rows = [
    { subject: 'b', predicate: 'p', object: '2' },
    { subject: 'a', predicate: 'q', object: '10' },
    { subject: 'c', predicate: 'o', object: '1' },
  ]

  it('orders by the chosen column without mutating input', () => {
    const sorted = sortRows(rows, { by: 'subject', ascending: true })
    expect(sorted.map(r => r.subject)).toEqual(['a', 'b', 'c'])
    expect(rows.map(r => r.subject)).toEqual(['b', 'a', 'c'])
  })

  it('reverses when descending', () => {
    const sorted = sortRows(rows, { by: 'predicate', ascending: false })
    expect(sorted.map(r => r.predicate)).toEqual(['q', 'p', 'o'])
  })
})
