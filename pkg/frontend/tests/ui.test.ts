import { afterEach, describe, expect, it, vi } from 'vitest'
import { ApiClient } from '../src/api.js'
import { App } from '../src/app.js'
import { installMockServer, record, recordText, type Route } from './replay.js'

const SID = 'fixture'
const MAN1 = 'http://kg-atlas.dev/ex/man1'
const ATTACK1 = 'http://kg-atlas.dev/ex/attack1'
const DATE1 = 'http://kg-atlas.dev/ex/date1'
const VIOLENT_ACT = 'http://kg-atlas.dev/onto#ViolentAct'

function viewKey(params: Record<string, string>): string {
  const qs = new URLSearchParams({ mode: 'individual', seeds: MAN1, ...params })
  return `/api/sessions/${SID}/view?${qs}`
}

function fixtureRoutes(): Record<string, Route> {
  const unavailable: Route = { status: 503, json: record('svg_unavailable.json') }
  return {
    '/api/meta/languages': { json: record('languages.json') },
    [`/api/sessions/${SID}/facets?lang=en`]: { json: record('facets_en.json') },
    [`/api/sessions/${SID}/facets?lang=ar`]: { json: record('facets_ar.json') },
    [viewKey({ depth: '1', lang: 'en', format: 'view' })]: {
      json: record('view_man1_d1_en.json'),
    },
    [viewKey({ depth: '2', lang: 'en', format: 'view' })]: {
      json: record('view_man1_d2_en.json'),
    },
    [viewKey({ depth: '2', lang: 'ar', format: 'view' })]: {
      json: record('view_man1_d2_ar.json'),
    },
    [viewKey({ depth: '2', lang: 'en', format: 'table' })]: {
      json: record('table_man1_d2_en.json'),
    },
    [viewKey({ depth: '1', lang: 'en', format: 'svg', layout: 'hierarchical' })]: unavailable,
    [viewKey({ depth: '2', lang: 'en', format: 'svg', layout: 'hierarchical' })]: unavailable,
    [`/api/sessions/${SID}/documents/ex1`]: { text: recordText('doc_ex1.txt') },
  }
}

async function mountApp(routes: Record<string, Route>, sessionId = SID) {
  installMockServer(routes)
  document.body.innerHTML = '<div id="app"></div>'
  const root = document.getElementById('app')!
  const app = new App(new ApiClient())
  app.mount(root)
  await app.start(sessionId)
  await app.idle()
  return { app, root }
}

function clickIndividual(root: HTMLElement, id: string) {
  const li = root.querySelector<HTMLElement>(`.facet-item[data-id="${id}"]`)
  expect(li).not.toBeNull()
  li!.click()
}

function setDepth(root: HTMLElement, depth: number) {
  const slider = root.querySelector<HTMLInputElement>('.depth-slider')!
  slider.value = String(depth)
  slider.dispatchEvent(new Event('input', { bubbles: true }))
}

function nodeIds(root: HTMLElement): string[] {
  return [...root.querySelectorAll('.graph-pane [data-node-id]')]
    .map(el => el.getAttribute('data-node-id') ?? '')
    .sort()
}

function hoverNode(root: HTMLElement, id: string) {
  const group = root.querySelector(`.graph-pane [data-node-id="${id}"]`)
  expect(group).not.toBeNull()
  group!.dispatchEvent(new Event('mouseenter'))
}

function unhoverNode(root: HTMLElement, id: string) {
  root.querySelector(`.graph-pane [data-node-id="${id}"]`)!.dispatchEvent(new Event('mouseleave'))
}

async function waitFor(cond: () => boolean, tries = 500): Promise<void> {
  for (let i = 0; i < tries; i++) {
    if (cond()) return
    await new Promise(resolve => setTimeout(resolve))
  }
  throw new Error('condition never became true')
}

afterEach(() => {
  vi.unstubAllGlobals()
})

describe('facet panel', () => {
  it('lists the five concepts with counts and the five individuals', async () => {
    const { root } = await mountApp(fixtureRoutes())

    const conceptLabels = [...root.querySelectorAll('.facet-concepts li .facet-label')].map(
      el => el.textContent,
    )
    expect(conceptLabels).toEqual(['Date', 'Location', 'Organization', 'Person', 'ViolentAct'])
    const counts = [...root.querySelectorAll('.facet-concepts li .facet-count')].map(
      el => el.textContent,
    )
    expect(counts).toEqual(['1', '1', '1', '1', '1'])

    const individualLabels = [...root.querySelectorAll('.facet-individuals li .facet-label')].map(
      el => el.textContent,
    )
    expect(individualLabels).toEqual([
      'Benghazi',
      'September 2012',
      'US consulate',
      'attack',
      'man',
    ])
  })

  it('switching mode clears the selection, then a concept seed loads its instances', async () => {
    const { app, root } = await mountApp(fixtureRoutes())
    const routes = fixtureRoutes()
    routes[
      viewKey({ mode: 'concept', seeds: VIOLENT_ACT, depth: '1', lang: 'en', format: 'view' })
    ] = { json: record('view_violentact_d1_en.json') }
    installMockServer(routes)

    clickIndividual(root, MAN1)
    await app.idle()
    expect(nodeIds(root)).toHaveLength(2)
    expect(root.querySelector('.facet-item.selected')).not.toBeNull()

    const radio = root.querySelector<HTMLInputElement>('input[name="mode"][value="concept"]')!
    radio.checked = true
    radio.dispatchEvent(new Event('change'))
    await app.idle()
    expect(root.querySelector('.graph-pane .empty-state')).not.toBeNull()
    expect(root.querySelector('.facet-item.selected')).toBeNull()
    expect(root.querySelector('.facet-concepts input:checked')).toBeNull()

    root.querySelector<HTMLInputElement>(`.facet-concepts input[data-id="${VIOLENT_ACT}"]`)!.click()
    await app.idle()
    expect(nodeIds(root)).toHaveLength(5)
  })
})

describe('graph pane', () => {
  it('depth slider 1 to 2 grows the rendered node count 2 to 5 for ex:man1', async () => {
    const { app, root } = await mountApp(fixtureRoutes())

    clickIndividual(root, MAN1)
    await app.idle()
    expect(nodeIds(root)).toEqual([ATTACK1, MAN1].sort())

    setDepth(root, 2)
    await app.idle()
    expect(nodeIds(root)).toHaveLength(5)
    expect(root.querySelectorAll('.graph-pane g.edge')).toHaveLength(4)
  })

  it('hovering ex:date1 shows two tooltip rows and highlights nothing without spans', async () => {
    const routes: Record<string, Route> = {
      '/api/meta/languages': { json: record('languages.json') },
      [`/api/sessions/${SID}/facets?lang=en`]: { json: record('facets_en.json') },
      [viewKey({ depth: '2', lang: 'en', format: 'view' })]: {
        json: record('view_man1_d2_en_nospans.json'),
      },
      [viewKey({ depth: '2', lang: 'en', format: 'svg', layout: 'hierarchical' })]: {
        status: 503,
        json: record('svg_unavailable.json'),
      },
    }
    const { app, root } = await mountApp(routes)

    setDepth(root, 2)
    clickIndividual(root, MAN1)
    await app.idle()
    expect(nodeIds(root)).toHaveLength(5)

    hoverNode(root, DATE1)
    const tooltip = root.querySelector<HTMLElement>('.tooltip')!
    expect(tooltip.hidden).toBe(false)
    const rows = [...tooltip.querySelectorAll('.tooltip-row')].map(el => el.textContent)
    expect(rows).toEqual(['month: 9', 'year: 2012'])
    expect(root.querySelectorAll('.text-pane mark.highlight')).toHaveLength(0)

    unhoverNode(root, DATE1)
    expect(tooltip.hidden).toBe(true)
  })

  it('hovering a node with spans highlights its text and text clicks link back', async () => {
    const { app, root } = await mountApp(fixtureRoutes())
    clickIndividual(root, MAN1)
    await app.idle()
    setDepth(root, 2)
    await app.idle()

    hoverNode(root, ATTACK1)
    const highlighted = [...root.querySelectorAll('.text-pane mark.highlight')]
    expect(highlighted.map(el => el.textContent)).toEqual(['attacked'])

    unhoverNode(root, ATTACK1)
    expect(root.querySelectorAll('.text-pane mark.highlight')).toHaveLength(0)

    const marks = [...root.querySelectorAll<HTMLElement>('.text-pane mark')]
    const menMark = marks.find(el => el.textContent === 'men')!
    menMark.click()
    const hovered = root.querySelector('.graph-pane .node.hovered')
    expect(hovered?.getAttribute('data-node-id')).toBe(MAN1)
  })

  it('a superseded view response is discarded', async () => {
    let release!: () => void
    const gate = new Promise<void>(resolve => {
      release = resolve
    })
    const routes = fixtureRoutes()
    routes[viewKey({ depth: '1', lang: 'en', format: 'view' })] = {
      json: record('view_man1_d1_en.json'),
      wait: gate,
    }
    const { app, root } = await mountApp(routes)

    clickIndividual(root, MAN1)
    setDepth(root, 2)
    await waitFor(() => nodeIds(root).length === 5)

    release()
    await app.idle()
    expect(nodeIds(root)).toHaveLength(5)
    expect(root.querySelector<HTMLElement>('.banner')!.hidden).toBe(true)
  })
})

describe('language switch', () => {
  it('Arabic flips text direction without changing the displayed node set', async () => {
    const { app, root } = await mountApp(fixtureRoutes())
    clickIndividual(root, MAN1)
    await app.idle()
    setDepth(root, 2)
    await app.idle()

    const before = nodeIds(root)
    expect(before).toHaveLength(5)
    const appEl = root.querySelector<HTMLElement>('.app')!
    expect(appEl.getAttribute('dir')).toBe('ltr')

    const select = root.querySelector<HTMLSelectElement>('.lang-select')!
    select.value = 'ar'
    select.dispatchEvent(new Event('change'))
    await app.idle()

    expect(appEl.getAttribute('dir')).toBe('rtl')
    expect(nodeIds(root)).toEqual(before)

    const conceptLabels = [...root.querySelectorAll('.facet-concepts li .facet-label')].map(
      el => el.textContent,
    )
    expect(conceptLabels).toContain('عمل عنيف')
    const dateCaption = root.querySelector(
      `.graph-pane [data-node-id="${DATE1}"] .node-class`,
    )!.textContent
    expect(dateCaption).toBe('(تاريخ)')
  })
})

describe('table tab', () => {
  it('shows the nine server rows and sorts by column', async () => {
    const { app, root } = await mountApp(fixtureRoutes())
    clickIndividual(root, MAN1)
    await app.idle()
    setDepth(root, 2)
    await app.idle()

    root.querySelector<HTMLButtonElement>('.tabs button[data-tab="table"]')!.click()
    await app.idle()
    expect(root.querySelector<HTMLElement>('.table-pane')!.hidden).toBe(false)
    expect(root.querySelector<HTMLElement>('.graph-pane')!.hidden).toBe(true)

    const cellRows = () =>
      [...root.querySelectorAll('.table-pane tbody tr')].map(tr =>
        [...tr.querySelectorAll('td')].map(td => td.textContent ?? ''),
      )
    const rows = cellRows()
    expect(rows).toHaveLength(9)
    const recorded = record<{ rows: { subject: string; predicate: string; object: string }[] }>(
      'table_man1_d2_en.json',
    ).rows
    const asTriples = (list: string[][]) => [...list].map(r => r.join('|')).sort()
    expect(asTriples(rows)).toEqual(
      asTriples(recorded.map(r => [r.subject, r.predicate, r.object])),
    )

    const objectHeader = root.querySelector<HTMLElement>('.table-pane th[data-column="object"]')!
    objectHeader.click()
    const ascending = cellRows().map(r => r[2])
    expect(ascending).toEqual([...ascending].sort((a, b) => a.localeCompare(b)))

    root.querySelector<HTMLElement>('.table-pane th[data-column="object"]')!.click()
    const descending = cellRows().map(r => r[2])
    expect(descending).toEqual([...ascending].reverse())
  })
})

describe('error handling', () => {
  it('a dead session shows a banner with a retry control', async () => {
    const routes: Record<string, Route> = {
      '/api/meta/languages': { json: record('languages.json') },
      '/api/sessions/nope/facets?lang=en': {
        status: 404,
        json: record('error_not_found.json'),
      },
    }
    const { root } = await mountApp(routes, 'nope')

    const banner = root.querySelector<HTMLElement>('.banner')!
    expect(banner.hidden).toBe(false)
    expect(banner.textContent).toContain('not_found')
    expect(banner.querySelector('button.retry')).not.toBeNull()
  })
})
