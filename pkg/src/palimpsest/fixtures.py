"""Desk-scale fixture corpus of classic French reuse pairs.

Each pair couples a source passage with its altered reappearance in a later
work: a Racine verse reshaping Corneille, Boileau's wig parody of Le Cid,
La Fontaine bending a La Rochefoucauld maxim, Lautréamont recycling Buffon's
natural history, and Balzac reusing himself across two works. Every document
carries one unrelated filler sentence so that a detector can produce blocks
outside the annotated region if it over-matches.

The gold region of each document is the exact quoted passage; offsets are
resolved against the normalized stored text at install time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Corpus, CorpusStore
from .evaluate import GoldSpan


@dataclass(frozen=True)
class FixtureDoc:
    title: str
    author: str
    passage: str
    filler: str
    passage_first: bool = True

    @property
    def text(self) -> str:
        if self.passage_first:
            return f"{self.passage}\n\n{self.filler}\n"
        return f"{self.filler}\n\n{self.passage}\n"


@dataclass(frozen=True)
class FixturePair:
    pair_id: str
    label: str
    a: FixtureDoc
    b: FixtureDoc
    in_acceptance_set: bool = True
    questionable: bool = False


_CORNEILLE_RIDES = FixtureDoc(
    title="Le Cid (vers des exploits)",
    author="Pierre Corneille",
    passage="Ses rides sur son front ont gravé ses exploits.",
    filler="Le vieux greffier rangeait alors quelques registres poudreux au "
    "fond d'une armoire basse.",
)

_RACINE_RIDES = FixtureDoc(
    title="Les Plaideurs (vers des exploits)",
    author="Jean Racine",
    passage="Ses rides sur son front gravaient tous ses exploits.",
    filler="Une lavandière étendait pendant ce temps son linge humide près "
    "du lavoir ensoleillé.",
    passage_first=False,
)

_CORNEILLE_STANCES = FixtureDoc(
    title="Le Cid (stances)",
    author="Pierre Corneille",
    passage=(
        "Ô rage ! ô désespoir ! ô vieillesse ennemie ! N'ai-je donc tant "
        "vécu que pour cette infamie ? Et ne suis-je blanchi dans les "
        "travaux guerriers Que pour voir en un jour flétrir tant de "
        "lauriers ? À des partis plus hauts ce beau fils doit prétendre ; "
        "Et le nouvel éclat de votre dignité Lui doit enfler le cœur d'une "
        "autre vanité."
    ),
    filler="Plus loin, un apprenti balayait distraitement les copeaux "
    "répandus devant l'atelier du menuisier.",
)

_BOILEAU_PERRUQUE = FixtureDoc(
    title="Le chapelain décoiffé",
    author="Nicolas Boileau",
    passage=(
        "Ô rage ! ô désespoir: ô perruque ma mie ! N'as-tu donc tant vécu "
        "que pour cette infamie? N'as-tu trompé l'espoir de tant de "
        "perruquiers, Que pour voir en un jour flétrir tant de lauriers? "
        "À de plus hauts partis, Philpote peut prétendre ! Et le nouvel "
        "éclat de cette pension Lui doit bien mettre au cœur une autre "
        "ambition !"
    ),
    filler="Au même moment, la bouquetière disposait ses œillets fanés sous "
    "l'auvent du marché couvert.",
    passage_first=False,
)

_LAROCHEFOUCAULD_MAXIME = FixtureDoc(
    title="Maximes (LXXVIII)",
    author="François de La Rochefoucauld",
    passage=(
        "L'amour de la justice n'est, en la plupart des hommes, que la "
        "crainte de souffrir l'injustice."
    ),
    filler="Le maître d'école essuyait posément la poussière de craie "
    "accumulée sur le pupitre.",
)

_LAFONTAINE_MAXIME = FixtureDoc(
    title="Maxime altérée",
    author="Jean de La Fontaine",
    passage=(
        "L'amour de la justice n'est, en la plupart des hommes, que le "
        "courage de souffrir l'injustice."
    ),
    filler="Un berger comptait au loin ses brebis dispersées dans la "
    "prairie brumeuse.",
    passage_first=False,
)

_BUFFON_DINDON = FixtureDoc(
    title="Histoire naturelle (le dindon)",
    author="Georges-Louis Leclerc de Buffon",
    passage=(
        "du bec supérieur s'élève une caroncule charnue, de forme conique "
        "et sillonnée par des rides transversales assez profondes."
    ),
    filler="L'apothicaire pesait ensuite des poudres amères dans de petits "
    "flacons verdâtres.",
)

_LAUTREAMONT_CARONCULE = FixtureDoc(
    title="Œuvres (la caroncule)",
    author="Lautréamont",
    passage=(
        "ou encore, comme la caroncule charnue, de forme conique, sillonnée "
        "par des rides transversales assez profondes, qui s'élève sur la "
        "base du bec supérieur du dindon"
    ),
    filler="La fermière remuait doucement la pâtée fumante destinée aux "
    "volailles du poulailler.",
    passage_first=False,
)

_BALZAC_PATHOLOGIE = FixtureDoc(
    title="La pathologie de la vie sociale",
    author="Honoré de Balzac",
    passage=(
        "Mais il est une personne dont la voix harmonieuse imprime au "
        "discours un charme également répandu dans ses manières. Elle sait "
        "et parler et se taire; s'occupe de vous avec délicatesse; ne manie "
        "que des sujets de conversation convenables, ses mots sont "
        "heureusement choisis; son langage est pur, sa raillerie caresse et "
        "sa critique ne blesse pas. Loin de contredire avec l'ignorante "
        "assurance d'un sot, elle semble chercher, en votre compagnie, le "
        "bon sens ou la vérité. Elle ne disserte pas plus qu'elle ne "
        "dispute, elle se plaît à conduire une discussion, qu'elle arrête à "
        "propos. D'humeur égale, son air est affable et riant, sa politesse "
        "n'a rien de forcé, son empressement n'est pas servile; elle réduit "
        "le respect à n'être plus qu'une ombre douce; elle ne vous fatigue "
        "jamais et vous laisse satisfait d'elle et de vous. Entraîné dans "
        "sa sphère par une puissance inexplicable, vous retrouvez son "
        "esprit de bonne grâce empreint sur les choses dont elle "
        "s'entourne : tout y flatte la vue, et vous y respirez comme l'air "
        "d'une patrie. Dans l'intimité, cette personne vous séduit par un "
        "ton naïf. Elle est naturelle. Jamais d'effort, de luxe, d'affiche. "
        "Ses sentiments sont simplement rendus parce qu'ils sont vrais. "
        "Elle est franche sans offenser aucun amour-propre. Elle accepte "
        "les hommes comme Dieu les a faits, pardonnant aux défauts et aux "
        "ridicules; concevant tous les âges et ne s'irritant de rien, parce "
        "qu'elle a le tact de tout prévoir. Elle oblige avant de consoler; "
        "elle est tendre et gaie, aussi l'aimerez-vous irrésistiblement. "
        "Vous la prenez pour type et lui vouez un culte."
    ),
    filler="Un cocher engourdi attendait dehors sous la pluie fine qui "
    "vernissait les pavés.",
)

_BALZAC_FIRMIANI = FixtureDoc(
    title="Madame Firmiani",
    author="Honoré de Balzac",
    passage=(
        "Avez-vous, pour votre bonheur, rencontré quelque personne dont la "
        "voix harmonieuse imprime à la parole un charme également répandu "
        "dans ses manières, qui sait et parler et se taire, qui s'occupe de "
        "vous avec délicatesse, dont les mots sont heureusement choisis, ou "
        "dont le langage est pur ? Sa raillerie caresse et sa critique ne "
        "blesse point; elle ne disserte pas plus qu'elle ne dispute, mais "
        "elle se plaît à conduire une discussion, et l'arrête à propos. Son "
        "air est affable et riant, sa politesse n'a rien de forcé, son "
        "empressement n'est pas servile; elle réduit le respect à n'être "
        "plus qu'une ombre douce; elle ne vous fatigue jamais, et vous "
        "laisse satisfait d'elle et de vous. Sa bonne grâce, vous la "
        "retrouvez empreinte dans les choses desquelles elle s'entourne. "
        "Chez elle, tout flatte la vue, et vous y respirez comme l'air "
        "d'une patrie. Cette femme est naturelle. En elle, jamais d'effort, "
        "elle n'affiche rien, ses sentiments sont simplement rendus, parce "
        "qu'ils sont vrais. Franche, elle sait n'offenser aucun "
        "amour-propre; elle accepte les hommes comme Dieu les a faits, "
        "plaignant les gens vicieux, pardonnant aux défauts et aux "
        "ridicules, concevant tous les âges, et ne s'irritant de rien, "
        "parce qu'elle a le tact de tout prévoir. À la fois tendre et gaie, "
        "elle oblige avant de consoler. Vous l'aimez tant, que si cet ange "
        "fait une faute, vous vous sentez prêt à la justifier. Vous "
        "connaissez alors madame Firmiani."
    ),
    filler="Dans l'antichambre, une pendule dorée égrenait paisiblement les "
    "heures du soir.",
    passage_first=False,
)

_PASCAL_ORDRE = FixtureDoc(
    title="Pensées (aphorisme de l'ordre)",
    author="Blaise Pascal",
    passage="Nous naissons injustes; car chacun tend à soi: cela est contre "
    "tout ordre.",
    filler="Le relieur encollait avec soin le dos fendillé d'un volume "
    "dépareillé.",
)

_LAFONTAINE_ORDRE = FixtureDoc(
    title="Aphorisme réécrit",
    author="Jean de La Fontaine",
    passage="Nous naissons justes. Chacun tend à soi. C'est envers l'ordre.",
    filler="Une couturière bâtissait à grands points l'ourlet d'une étoffe "
    "grise.",
    passage_first=False,
)

_BALZAC_VIEILLE_FILLE = FixtureDoc(
    title="La Vieille Fille",
    author="Honoré de Balzac",
    passage=(
        "Son nez aquilin contrastait avec la petitesse de son front, car il "
        "est rare que cette forme de nez n'implique pas un beau front. "
        "Malgré de grosses lèvres rouges l'indice d'une grande bonté, ce "
        "front annonçait trop peu d'idées pour que le cœur fût dirigé par "
        "l'intelligence : elle devait être bienfaisante sans grâce."
    ),
    filler="Le serrurier limait patiemment le panneton d'une clef "
    "récalcitrante.",
)

_BOURDON_PHYSIOGNOMONIE = FixtureDoc(
    title="La Physiognomonie et la Phrénologie",
    author="Mathias Bourdon",
    passage=(
        "Le nez et le front sont presque toujours dans un accord parfait; "
        "ce que l'un d'eux annonce l'autre le confirme unanimes sont leurs "
        "décisions. Il est rare qu'un nez ignoble soit uni à un beau front "
        "intellectuel. Tel nez, tel front, tel esprit cette règle a peu "
        "d'exceptions."
    ),
    filler="Un imprimeur encrait méthodiquement les caractères alignés de "
    "sa presse à bras.",
    passage_first=False,
)

_BALZAC_BEATRIX = FixtureDoc(
    title="Béatrix (le costume d'ancien temps)",
    author="Honoré de Balzac",
    passage=(
        "Si elle pouvait par un artifice quelconque porter le costume "
        "d'ancien temps où les femmes avaient des corsets pointus à "
        "échelles de rubans s'élançant minces et frêles de l'ampleur "
        "étoffée des jupes en brocatelle à plis soutenus et puissants, "
        "s'entouraient de fraises godronnées, cachaient leurs bras dans des "
        "manches à crevés et à sabots de dentelles d'où la main sortait "
        "comme une fleur de sa capsule, et qui rejetaient leurs mille "
        "boucles de leur chevelure sur leurs épaules au delà d'un chignon "
        "ficelé de pierreries, elle lutterait avec avantage avec les "
        "beautés les plus célèbres que vous voyez vêtues ainsi dit-elle en "
        "montrant un tableau à Calyste, debout, devant un tenant une main "
        "un papier et chantant avec un seigneur brabançon, pendant qu'un "
        "nègre verse dans un verre à patte du vieux vin d'Espagne et qu'une "
        "vieille femme de charge arrange des biscuits."
    ),
    filler="Le jardinier taillait pendant l'après-midi la charmille "
    "débordante du parterre voisin.",
)

_GAUTIER_PIQUILLO = FixtureDoc(
    title="Portraits contemporains (Piquillo)",
    author="Théophile Gautier",
    passage=(
        "Les costumes romanesques de Piquillo conviennent beaucoup au type "
        "de beauté de Mlle Colon; les grandes robes de lampas ou de "
        "brocatelle aux plis soutenus et puissants, les hautes fraises "
        "godronnées et frappées à l'emporte-pièce, comme on en voit dans "
        "les dessins de Romain de Hooge; les manches à crevés et à sabots "
        "de dentelles, dont la main sort comme le pistil du calice d'une "
        "fleur, les feutres à ganse de perles, à plumes crespelées, les "
        "chaînes et les rivières de diamants écaillant d'étincelles "
        "papillotantes la blancheur mate de la poitrine, les corsets "
        "pointus à échelles de rubans s'élançant minces et frêles de "
        "l'ampleur étoffée des jupes: - toute la toilette abondante et "
        "fantasque du seizième siècle s'adapte merveilleusement à la "
        "physionomie de Mlle Colon, que l'on prendrait, dans un de ses "
        "costumes capricieux, pour un de ces belles dames des gravures "
        "d'Abraham Bosse, qui marchent gravement une tulipe à la main, "
        "suivies du petit page nègre qui porte leur queue, leur chien et "
        "leur manchon, dans les allées bordées de buis d'un parterre du "
        "temps de Louis XIII."
    ),
    filler="Une écaillère vantait bruyamment ses huîtres fraîches aux "
    "passants du quai.",
    passage_first=False,
)


FIXTURE_PAIRS: tuple[FixturePair, ...] = (
    FixturePair(
        pair_id="corneille-racine",
        label="verse reshaped: exploits engraved on a brow",
        a=_CORNEILLE_RIDES,
        b=_RACINE_RIDES,
    ),
    FixturePair(
        pair_id="boileau-cid",
        label="wig parody of the Cid stanzas",
        a=_CORNEILLE_STANCES,
        b=_BOILEAU_PERRUQUE,
    ),
    FixturePair(
        pair_id="maxime-courage",
        label="fear of injustice turned into courage",
        a=_LAROCHEFOUCAULD_MAXIME,
        b=_LAFONTAINE_MAXIME,
    ),
    FixturePair(
        pair_id="caroncule",
        label="natural-history description recycled",
        a=_BUFFON_DINDON,
        b=_LAUTREAMONT_CARONCULE,
    ),
    FixturePair(
        pair_id="balzac-self",
        label="self-reuse across two Balzac works",
        a=_BALZAC_PATHOLOGIE,
        b=_BALZAC_FIRMIANI,
    ),
    FixturePair(
        pair_id="pascal-ordre",
        label="aphorism inverted",
        a=_PASCAL_ORDRE,
        b=_LAFONTAINE_ORDRE,
        in_acceptance_set=False,
    ),
    FixturePair(
        pair_id="physiognomonie",
        label="scientific physiognomy echoed in a novel",
        a=_BALZAC_VIEILLE_FILLE,
        b=_BOURDON_PHYSIOGNOMONIE,
        in_acceptance_set=False,
    ),
    FixturePair(
        pair_id="beatrix-piquillo",
        label="costume description (annotator marked doubtful)",
        a=_BALZAC_BEATRIX,
        b=_GAUTIER_PIQUILLO,
        in_acceptance_set=False,
        questionable=True,
    ),
)


def install_fixture_corpus(store: CorpusStore, corpus_id: str = "demo") -> Corpus:
    """Ingest every fixture document and return the loaded corpus."""
    for pair in FIXTURE_PAIRS:
        for doc in (pair.a, pair.b):
            store.ingest(
                doc.text.encode("utf-8"),
                corpus_id=corpus_id,
                title=doc.title,
                author=doc.author,
            )
    return store.load_corpus(corpus_id)


def _doc_id_by_title(corpus: Corpus, title: str) -> str:
    for doc in corpus.documents:
        if doc.title == title:
            return doc.doc_id
    raise KeyError(title)


def _region_span(corpus: Corpus, doc_id: str, region: str) -> tuple[int, int]:
    text = corpus.get(doc_id).text
    start = text.find(region)
    if start < 0:
        raise ValueError(f"gold region not found in {doc_id}")
    return (start, start + len(region))


def fixture_gold(
    corpus: Corpus, acceptance_only: bool = False
) -> list[GoldSpan]:
    """Gold spans over the quoted regions, offsets resolved in the corpus."""
    spans = []
    for pair in FIXTURE_PAIRS:
        if acceptance_only and not pair.in_acceptance_set:
            continue
        id_a = _doc_id_by_title(corpus, pair.a.title)
        id_b = _doc_id_by_title(corpus, pair.b.title)
        (doc_a, region_a), (doc_b, region_b) = sorted(
            [(id_a, pair.a.passage), (id_b, pair.b.passage)]
        )
        spans.append(
            GoldSpan(
                doc_a=doc_a,
                doc_b=doc_b,
                a_span=_region_span(corpus, doc_a, region_a),
                b_span=_region_span(corpus, doc_b, region_b),
                label=pair.label,
                questionable=pair.questionable,
            )
        )
    return spans


def fixture_pair_doc_ids(corpus: Corpus, pair_id: str) -> tuple[str, str]:
    for pair in FIXTURE_PAIRS:
        if pair.pair_id == pair_id:
            return (
                _doc_id_by_title(corpus, pair.a.title),
                _doc_id_by_title(corpus, pair.b.title),
            )
    raise KeyError(pair_id)
